#include "divseq/text.hpp"

#include <algorithm>
#include <cctype>

#include "divseq/errors.hpp"

namespace divseq {

std::string format_poly(const Poly& p, const std::vector<std::string>& variables)
{
    if (variables.size() != p.depth())
        throw InternalError("variable list does not match polynomial depth");
    const auto monomials = to_monomials(p);
    if (monomials.empty())
        return "0";

    std::string out;
    bool first = true;
    for (const auto& m : monomials) {
        const bool negative = sgn(m.coeff) < 0;
        if (negative)
            out += '-';
        else if (!first)
            out += '+';
        first = false;

        std::string factors;
        for (std::size_t i = 0; i < m.exponents.size(); ++i) {
            if (m.exponents[i] == 0)
                continue;
            if (!factors.empty())
                factors += '*';
            factors += variables[i];
            if (m.exponents[i] > 1)
                factors += '^' + std::to_string(m.exponents[i]);
        }
        const Integer magnitude = abs(m.coeff);
        if (factors.empty())
            out += magnitude.get_str();
        else if (magnitude == 1)
            out += factors;
        else
            out += magnitude.get_str() + '*' + factors;
    }
    return out;
}

namespace {

constexpr Poly::Exponent max_exponent = 1'000'000;

class Parser {
public:
    Parser(std::string_view text, const std::vector<std::string>& variables)
        : text_(text), vars_(variables)
    {
    }

    Poly run()
    {
        skip_space();
        if (at_end())
            fail("empty expression");
        Poly p = expression();
        skip_space();
        if (!at_end())
            fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
        return p;
    }

private:
    Poly expression()
    {
        skip_space();
        bool negate = false;
        if (peek() == '+' || peek() == '-') {
            negate = peek() == '-';
            ++pos_;
        }
        Poly acc = product();
        if (negate)
            acc = -acc;
        for (;;) {
            skip_space();
            if (peek() == '+') {
                ++pos_;
                acc = acc + product();
            } else if (peek() == '-') {
                ++pos_;
                acc = acc - product();
            } else {
                return acc;
            }
        }
    }

    Poly product()
    {
        Poly acc = power();
        for (;;) {
            skip_space();
            if (peek() == '*') {
                ++pos_;
                acc = acc * power();
            } else if (starts_factor()) {
                acc = acc * power();
            } else {
                return acc;
            }
        }
    }

    Poly power()
    {
        Poly base = primary();
        skip_space();
        if (peek() != '^')
            return base;
        ++pos_;
        skip_space();
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            fail("exponent must be a nonnegative integer literal");
        const std::string digits = take_while([](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
        if (digits.size() > 7 || std::stoul(digits) > max_exponent)
            fail("exponent too large");
        return pow(base, std::stoul(digits));
    }

    Poly primary()
    {
        skip_space();
        const char c = peek();
        if (c == '-') {
            ++pos_;
            return -power();
        }
        if (c == '+') {
            ++pos_;
            return power();
        }
        if (c == '(') {
            ++pos_;
            Poly inner = expression();
            skip_space();
            if (peek() != ')')
                fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::string digits = take_while([](char ch) { return std::isdigit(static_cast<unsigned char>(ch)) != 0; });
            return Poly::constant(vars_.size(), Integer(digits));
        }
        if (is_ident_start(c)) {
            const std::string name = take_while([](char ch) {
                return std::isalnum(static_cast<unsigned char>(ch)) != 0 || ch == '_';
            });
            auto it = std::find(vars_.begin(), vars_.end(), name);
            if (it == vars_.end())
                fail("unknown variable '" + name + "'");
            return Poly::variable(vars_.size(), static_cast<std::size_t>(it - vars_.begin()));
        }
        if (at_end())
            fail("unexpected end of input");
        fail("unexpected character '" + std::string(1, c) + "'");
    }

    bool starts_factor() const
    {
        const char c = peek();
        return c == '(' || std::isdigit(static_cast<unsigned char>(c)) || is_ident_start(c);
    }

    static bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_'; }

    template <typename Pred>
    std::string take_while(Pred pred)
    {
        const std::size_t start = pos_;
        while (!at_end() && pred(text_[pos_]))
            ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    void skip_space()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    [[noreturn]] void fail(const std::string& what) const
    {
        throw DomainError("cannot parse '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + what);
    }

    std::string_view text_;
    const std::vector<std::string>& vars_;
    std::size_t pos_ = 0;
};

} // namespace

Poly parse_poly(std::string_view text, const std::vector<std::string>& variables)
{
    return Parser(text, variables).run();
}

} // namespace divseq
