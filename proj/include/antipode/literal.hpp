#ifndef ANTIPODE_LITERAL_HPP
#define ANTIPODE_LITERAL_HPP

#include <cctype>
#include <complex>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "antipode/cyclotomic.hpp"
#include "antipode/error.hpp"
#include "antipode/factored.hpp"

namespace antipode {

/// Laurent polynomial in the torus parameters L1..Lr with coefficients in Q(zeta_n).
class TorusPolynomial {
public:
    using Exponents = std::vector<int>;

    TorusPolynomial(FieldPtr field, int rank) : field_(std::move(field)), rank_(rank) {}

    static TorusPolynomial constant(const CycNum& c, int rank)
    {
        TorusPolynomial p(c.field(), rank);
        if (!c.is_zero())
            p.terms_.emplace(Exponents(rank, 0), c);
        return p;
    }

    static TorusPolynomial variable(const FieldPtr& field, int rank, int index, int exponent)
    {
        TorusPolynomial p(field, rank);
        Exponents e(rank, 0);
        e[index] = exponent;
        p.terms_.emplace(std::move(e), CycNum(field, 1L));
        return p;
    }

    const FieldPtr& field() const noexcept { return field_; }
    int rank() const noexcept { return rank_; }
    const std::map<Exponents, CycNum>& terms() const noexcept { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() <= 1; }

    bool is_constant() const
    {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents(rank_, 0));
    }

    CycNum constant_value() const
    {
        if (!is_constant())
            throw Error(ErrorKind::UnsupportedSymbolic, "expression depends on a torus parameter");
        return terms_.empty() ? CycNum(field_, 0L) : terms_.begin()->second;
    }

    /// Coefficient of the given monomial (zero when absent).
    CycNum coefficient(const Exponents& e) const
    {
        auto it = terms_.find(e);
        return it == terms_.end() ? CycNum(field_, 0L) : it->second;
    }

    friend bool operator==(const TorusPolynomial& a, const TorusPolynomial& b) { return a.terms_ == b.terms_; }

    TorusPolynomial& operator+=(const TorusPolynomial& b) { return accumulate(b, CycNum(field_, 1L)); }
    TorusPolynomial& operator-=(const TorusPolynomial& b) { return accumulate(b, CycNum(field_, -1L)); }

    friend TorusPolynomial operator+(TorusPolynomial a, const TorusPolynomial& b) { return a += b; }
    friend TorusPolynomial operator-(TorusPolynomial a, const TorusPolynomial& b) { return a -= b; }

    friend TorusPolynomial operator*(const TorusPolynomial& a, const TorusPolynomial& b)
    {
        TorusPolynomial r(a.field_, a.rank_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e(a.rank_);
                for (int i = 0; i < a.rank_; ++i)
                    e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }

    /// Division by a single nonzero monomial.
    TorusPolynomial divide_by_monomial(const TorusPolynomial& m) const
    {
        if (m.terms_.size() != 1)
            throw Error(ErrorKind::UnsupportedSymbolic, "division by a multi-term polynomial");
        const auto& [em, cm] = *m.terms_.begin();
        TorusPolynomial r(field_, rank_);
        const CycNum inv = cm.inverse();
        for (const auto& [e, c] : terms_) {
            Exponents d(rank_);
            for (int i = 0; i < rank_; ++i)
                d[i] = e[i] - em[i];
            r.add_term(d, c * inv);
        }
        return r;
    }

    CycNum evaluate(std::span<const CycNum> torus) const
    {
        CycNum acc(field_, 0L);
        for (const auto& [e, c] : terms_) {
            CycNum t = c;
            for (int i = 0; i < rank_; ++i) {
                const CycNum base = e[i] >= 0 ? torus[i] : torus[i].inverse();
                for (int k = 0; k < std::abs(e[i]); ++k)
                    t *= base;
            }
            acc += t;
        }
        return acc;
    }

    std::complex<double> evaluate(std::span<const std::complex<double>> torus) const
    {
        std::complex<double> acc = 0;
        for (const auto& [e, c] : terms_) {
            std::complex<double> t = c.to_complex();
            for (int i = 0; i < rank_; ++i)
                t *= std::pow(torus[i], e[i]);
            acc += t;
        }
        return acc;
    }

    /*
     * Recognizes c (constant) or c1*Lambda^e + c0 with e a nonzero nonnegative
     * exponent vector and -c0/c1 = zeta^{-2a}; the latter is returned as
     * c1*zeta^{-a} * (Lambda^e zeta^a - zeta^{-a}).
     */
    FactoredValue to_factored() const
    {
        if (is_constant())
            return FactoredValue(constant_value());
        const Exponents zero(rank_, 0);
        if (terms_.size() == 2 && terms_.count(zero) == 1) {
            const CycNum c0 = terms_.at(zero);
            auto it = terms_.begin();
            if (it->first == zero)
                ++it;
            const auto& [e, c1] = *it;
            bool nonnegative = true;
            for (int x : e)
                nonnegative = nonnegative && x >= 0;
            const CycNum target = -c0 / c1;
            const int n = field_->order();
            for (int a = 0; nonnegative && a < n; ++a) {
                if (CycNum::zeta_power(field_, -2L * a) == target) {
                    FactoredValue v(c1 * CycNum::zeta_power(field_, -a));
                    return v * FactoredValue::atom(field_, e, a);
                }
            }
        }
        throw Error(ErrorKind::UnsupportedSymbolic,
                    "cannot write as a product of factors (Lambda^root z^a - z^-a): " + to_string());
    }

    std::string to_string() const
    {
        if (terms_.empty())
            return "0";
        std::string out;
        for (const auto& [e, c] : terms_) {
            std::string mono;
            for (int i = 0; i < rank_; ++i) {
                if (e[i] == 0)
                    continue;
                if (!mono.empty())
                    mono += "*";
                mono += (rank_ == 1 ? std::string("L") : "L" + std::to_string(i + 1)) + "^" + std::to_string(e[i]);
            }
            std::string coeff = c.to_string();
            std::string term = mono.empty() ? coeff : (coeff == "1" ? mono : "(" + coeff + ")*" + mono);
            out += out.empty() ? term : " + " + term;
        }
        return out;
    }

private:
    void add_term(const Exponents& e, const CycNum& c)
    {
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted)
            it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }

    TorusPolynomial& accumulate(const TorusPolynomial& b, const CycNum& sign)
    {
        for (const auto& [e, c] : b.terms_)
            add_term(e, c * sign);
        return *this;
    }

    FieldPtr field_;
    int rank_;
    std::map<Exponents, CycNum> terms_;
};

struct LiteralContext {
    FieldPtr field;
    int torus_rank = 0; // number of admissible L parameters
};

inline std::string to_string(const TorusPolynomial& p) { return p.to_string(); }

/// Value of a scalar literal: a polynomial (sums allowed) or a factored product.
using LiteralValue = std::variant<TorusPolynomial, FactoredValue>;

namespace detail {

class LiteralParser {
public:
    LiteralParser(std::string_view text, const LiteralContext& ctx) : text_(text), ctx_(ctx) {}

    LiteralValue parse()
    {
        LiteralValue v = expression();
        skip_space();
        if (pos_ != text_.size())
            fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw Error(ErrorKind::ParseError,
                    "scalar literal \"" + std::string(text_) + "\" column " + std::to_string(pos_ + 1) + ": " + what);
    }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool accept(char c)
    {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    long integer()
    {
        skip_space();
        bool negative = false;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+'))
            negative = text_[pos_++] == '-';
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected an integer");
        const long v = std::stol(std::string(text_.substr(start, pos_ - start)));
        return negative ? -v : v;
    }

    TorusPolynomial as_poly(const LiteralValue& v) const
    {
        if (auto p = std::get_if<TorusPolynomial>(&v))
            return *p;
        const auto& f = std::get<FactoredValue>(v);
        if (!f.is_constant())
            throw Error(ErrorKind::UnsupportedSymbolic, "sums of factored products are not supported");
        return TorusPolynomial::constant(f.constant(), ctx_.torus_rank);
    }

    static FactoredValue as_factored(const LiteralValue& v)
    {
        if (auto f = std::get_if<FactoredValue>(&v))
            return *f;
        return std::get<TorusPolynomial>(v).to_factored();
    }

    LiteralValue multiply(const LiteralValue& a, const LiteralValue& b) const
    {
        auto pa = std::get_if<TorusPolynomial>(&a);
        auto pb = std::get_if<TorusPolynomial>(&b);
        if (pa && pb && (pa->is_monomial() || pb->is_monomial()))
            return *pa * *pb;
        return as_factored(a) * as_factored(b);
    }

    LiteralValue divide(const LiteralValue& a, const LiteralValue& b) const
    {
        auto pa = std::get_if<TorusPolynomial>(&a);
        auto pb = std::get_if<TorusPolynomial>(&b);
        if (pb && pb->is_zero())
            throw Error(ErrorKind::DivisionByZero, "scalar literal \"" + std::string(text_) + "\" divides by zero");
        if (pa && pb && pb->is_monomial())
            return pa->divide_by_monomial(*pb);
        return as_factored(a) / as_factored(b);
    }

    LiteralValue expression()
    {
        LiteralValue acc = term();
        for (;;) {
            if (accept('+'))
                acc = as_poly(acc) + as_poly(term());
            else if (accept('-'))
                acc = as_poly(acc) - as_poly(term());
            else
                return acc;
        }
    }

    LiteralValue term()
    {
        LiteralValue acc = unary();
        for (;;) {
            if (accept('*'))
                acc = multiply(acc, unary());
            else if (accept('/'))
                acc = divide(acc, unary());
            else
                return acc;
        }
    }

    LiteralValue unary()
    {
        if (accept('-')) {
            LiteralValue v = unary();
            return multiply(TorusPolynomial::constant(CycNum(ctx_.field, -1L), ctx_.torus_rank), v);
        }
        if (accept('+'))
            return unary();
        return power();
    }

    LiteralValue power()
    {
        LiteralValue base = primary();
        if (std::holds_alternative<TorusPolynomial>(base) && last_was_group_ && accept('^')) {
            const long e = integer();
            FactoredValue f = as_factored(base);
            f = f.pow(static_cast<int>(e));
            if (f.is_constant())
                return TorusPolynomial::constant(f.constant(), ctx_.torus_rank);
            return f;
        }
        if (std::holds_alternative<FactoredValue>(base) && last_was_group_ && accept('^'))
            return std::get<FactoredValue>(base).pow(static_cast<int>(integer()));
        return base;
    }

    LiteralValue primary()
    {
        skip_space();
        last_was_group_ = false;
        if (pos_ >= text_.size())
            fail("unexpected end of literal");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            LiteralValue v = expression();
            if (!accept(')'))
                fail("expected ')'");
            last_was_group_ = true;
            return v;
        }
        if (c == 'z') {
            ++pos_;
            long e = 1;
            if (accept('^'))
                e = integer();
            return TorusPolynomial::constant(CycNum::zeta_power(ctx_.field, e), ctx_.torus_rank);
        }
        if (c == 'L') {
            ++pos_;
            int index = 1;
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            if (pos_ > start)
                index = std::stoi(std::string(text_.substr(start, pos_ - start)));
            if (index < 1 || index > ctx_.torus_rank)
                fail("torus parameter L" + std::to_string(index) + " not available (rank " +
                     std::to_string(ctx_.torus_rank) + ")");
            long e = 1;
            if (accept('^'))
                e = integer();
            return TorusPolynomial::variable(ctx_.field, ctx_.torus_rank, index - 1, static_cast<int>(e));
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return TorusPolynomial::constant(CycNum(ctx_.field, number()), ctx_.torus_rank);
        fail("unexpected character '" + std::string(1, c) + "'");
    }

    // int or decimal; a following '/' is handled as ordinary division.
    Rational number()
    {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        Rational value(std::string(text_.substr(start, pos_ - start)));
        if (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            const std::size_t fstart = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            const std::string frac(text_.substr(fstart, pos_ - fstart));
            if (!frac.empty()) {
                mpz_class denom = 1;
                for (std::size_t i = 0; i < frac.size(); ++i)
                    denom *= 10;
                Rational part(mpz_class(frac), denom);
                part.canonicalize();
                value += part;
            }
        }
        return value;
    }

    std::string_view text_;
    const LiteralContext& ctx_;
    std::size_t pos_ = 0;
    bool last_was_group_ = false;
};

} // namespace detail

inline LiteralValue parse_literal(std::string_view text, const LiteralContext& ctx)
{
    return detail::LiteralParser(text, ctx).parse();
}

/// Parses a literal that must be an element of Q(zeta_n).
inline CycNum parse_cyclotomic(std::string_view text, const LiteralContext& ctx)
{
    LiteralValue v = parse_literal(text, ctx);
    if (auto p = std::get_if<TorusPolynomial>(&v))
        return p->constant_value();
    const auto& f = std::get<FactoredValue>(v);
    if (!f.is_constant())
        throw Error(ErrorKind::UnsupportedSymbolic, "literal \"" + std::string(text) + "\" depends on a torus parameter");
    return f.constant();
}

inline FactoredValue parse_factored(std::string_view text, const LiteralContext& ctx)
{
    LiteralValue v = parse_literal(text, ctx);
    if (auto p = std::get_if<TorusPolynomial>(&v))
        return p->to_factored();
    return std::get<FactoredValue>(v);
}

/// True when the literal mentions a torus parameter.
inline bool mentions_torus(std::string_view text) { return text.find('L') != std::string_view::npos; }

/// Largest L index used in the literal (0 when none).
inline int torus_rank_of(std::string_view text)
{
    int rank = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] != 'L')
            continue;
        std::size_t j = i + 1;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
            ++j;
        int index = j > i + 1 ? std::stoi(std::string(text.substr(i + 1, j - i - 1))) : 1;
        rank = std::max(rank, index);
    }
    return rank;
}

} // namespace antipode

#endif
