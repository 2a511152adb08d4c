#include "mouldlab/parse.hpp"

#include <cctype>

#include "mouldlab/errors.hpp"

namespace mouldlab {

namespace {

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    RatFun parse()
    {
        RatFun r = expr();
        skip();
        if (pos_ != s_.size())
            fail({"operator", "end of input"});
        return r;
    }

private:
    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    char peek()
    {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    [[noreturn]] void fail(std::vector<std::string> expected)
    {
        skip();
        std::string found = pos_ < s_.size() ? std::string(1, s_[pos_]) : "";
        throw ParseError(pos_, std::move(expected), found);
    }

    // A term kept as a product of factors with integer exponents, so that
    // a divisor such as (u2+4)^3 is factored before it is expanded.
    using Product = std::vector<std::pair<RatFun, int>>;

    static RatFun collapse(const Product &p)
    {
        RatFun num(1);
        Polynomial extra(1);
        std::vector<std::pair<Polynomial, unsigned>> den;
        for (const auto &[f, e] : p) {
            if (e >= 0) {
                num *= f.pow(e);
                continue;
            }
            if (f.is_zero())
                throw DomainError("division by zero");
            unsigned k = static_cast<unsigned>(-e);
            den.emplace_back(f.numerator(), k);
            extra = extra * f.denominator().pow(k);
        }
        if (den.empty())
            return num;
        return num * RatFun::from_factors(extra, den);
    }

    RatFun expr() { return collapse(sum()); }

    // A single term is returned unexpanded.
    Product sum()
    {
        Product first = term();
        if (peek() != '+' && peek() != '-')
            return first;
        RatFun r = collapse(first);
        for (char c = peek(); c == '+' || c == '-'; c = peek()) {
            ++pos_;
            RatFun rhs = collapse(term());
            r = c == '+' ? r + rhs : r - rhs;
        }
        return {{r, 1}};
    }

    Product term()
    {
        Product r = unary();
        for (char c = peek(); c == '*' || c == '/'; c = peek()) {
            std::size_t at = pos_++;
            Product rhs = unary();
            for (auto &[f, e] : rhs) {
                if (c == '/') {
                    if (f.is_zero() && e > 0)
                        throw DomainError("division by zero at position " + std::to_string(at));
                    e = -e;
                }
                r.emplace_back(std::move(f), e);
            }
        }
        return r;
    }

    Product unary()
    {
        char c = peek();
        if (c == '-') {
            ++pos_;
            Product r = unary();
            r.emplace_back(RatFun(-1), 1);
            return r;
        }
        if (c == '+') {
            ++pos_;
            return unary();
        }
        return power();
    }

    Product power()
    {
        Product base = primary();
        if (peek() != '^')
            return base;
        ++pos_;
        bool negative = false;
        if (peek() == '-') {
            negative = true;
            ++pos_;
        }
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            fail({"integer exponent"});
        std::size_t start = pos_;
        std::string digits = read_digits();
        if (digits.size() > 4)
            throw ParseError(start, {"exponent below 10000"}, digits);
        int e = std::stoi(digits);
        for (auto &[f, k] : base) {
            if (negative && k > 0 && f.is_zero())
                throw DomainError("zero raised to a negative power");
            k *= negative ? -e : e;
        }
        return base;
    }

    std::string read_digits()
    {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        return std::string(s_.substr(start, pos_ - start));
    }

    Product primary()
    {
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c)))
            return {{RatFun(Rational(mpz_class(read_digits()))), 1}};
        if (c == '(') {
            ++pos_;
            Product r = sum();
            if (peek() != ')')
                fail({"')'", "operator"});
            ++pos_;
            return r;
        }
        if (c == 't' || c == 'x') {
            ++pos_;
            return {{RatFun::variable(c == 't' ? Var::t() : Var::x()), 1}};
        }
        if (c == 'u') {
            std::size_t start = pos_++;
            if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                fail({"variable index"});
            std::string digits = read_digits();
            int index = digits.size() > 2 ? 0 : std::stoi(digits);
            if (index < 1 || index > Var::kMaxU)
                throw ParseError(start, {"variable u1..u" + std::to_string(Var::kMaxU)}, "u" + digits);
            return {{RatFun::variable(Var::u(index)), 1}};
        }
        fail({"number", "variable", "'('"});
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

} // namespace

RatFun parse_expression(std::string_view text)
{
    return Parser(text).parse();
}

} // namespace mouldlab
