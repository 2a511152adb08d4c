#pragma once

// Test-side reference implementations, written independently of the library.

#include <cctype>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace oracle {

// Direct evaluation of an expression string over Q, variable by variable.
// Returns nullopt on division by zero.
class Evaluator {
public:
    Evaluator(std::string text, std::map<std::string, mpq_class> values) : s_(std::move(text)), v_(std::move(values)) {}

    std::optional<mpq_class> run()
    {
        try {
            mpq_class r = expr();
            skip();
            if (i_ != s_.size())
                throw std::runtime_error("trailing input");
            return r;
        } catch (const DivByZero &) {
            return std::nullopt;
        }
    }

private:
    struct DivByZero {};

    void skip()
    {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_])))
            ++i_;
    }
    bool eat(char c)
    {
        skip();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }
    mpq_class expr()
    {
        mpq_class r = term();
        while (true) {
            if (eat('+'))
                r += term();
            else if (eat('-'))
                r -= term();
            else
                return r;
        }
    }
    mpq_class term()
    {
        mpq_class r = unary();
        while (true) {
            if (eat('*')) {
                r *= unary();
            } else if (eat('/')) {
                mpq_class d = unary();
                if (d == 0)
                    throw DivByZero{};
                r /= d;
            } else {
                return r;
            }
        }
    }
    mpq_class unary()
    {
        if (eat('-'))
            return -unary();
        if (eat('+'))
            return unary();
        return power();
    }
    mpq_class power()
    {
        mpq_class b = primary();
        if (!eat('^'))
            return b;
        bool neg = eat('-');
        long e = integer();
        mpq_class r = 1;
        for (long k = 0; k < e; ++k)
            r *= b;
        if (neg) {
            if (r == 0)
                throw DivByZero{};
            r = 1 / r;
        }
        return r;
    }
    long integer()
    {
        skip();
        std::size_t start = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
            ++i_;
        return std::stol(s_.substr(start, i_ - start));
    }
    mpq_class primary()
    {
        if (eat('(')) {
            mpq_class r = expr();
            if (!eat(')'))
                throw std::runtime_error("missing )");
            return r;
        }
        skip();
        if (std::isdigit(static_cast<unsigned char>(s_[i_]))) {
            std::size_t start = i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
                ++i_;
            return mpq_class(mpz_class(s_.substr(start, i_ - start)));
        }
        std::size_t start = i_++;
        if (s_[start] == 'u')
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
                ++i_;
        return v_.at(s_.substr(start, i_ - start));
    }

    std::string s_;
    std::map<std::string, mpq_class> v_;
    std::size_t i_ = 0;
};

// Random expression text over u1..u_vars and t.
inline std::string random_expression(std::mt19937_64 &rng, int vars, int depth)
{
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    if (depth == 0 || pick(0, 3) == 0) {
        int k = pick(0, vars + 1);
        if (k == 0)
            return std::to_string(pick(1, 5));
        if (k == vars + 1)
            return "t";
        return "u" + std::to_string(k);
    }
    std::string a = random_expression(rng, vars, depth - 1), b = random_expression(rng, vars, depth - 1);
    switch (pick(0, 5)) {
    case 0:
        return "(" + a + "+" + b + ")";
    case 1:
        return "(" + a + "-" + b + ")";
    case 2:
        return a + "*" + b;
    case 3:
        return "(" + a + ")/(" + b + ")";
    case 4:
        return "(" + a + ")^" + std::to_string(pick(0, 3));
    default:
        return "-(" + a + ")";
    }
}

inline mpz_class binomial(long n, long k)
{
    if (k < 0 || k > n)
        return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

} // namespace oracle
