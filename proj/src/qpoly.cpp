#include "nilorb/qpoly.hpp"

#include <cctype>

#include "nilorb/errors.hpp"

namespace nilorb {

QPoly::QPoly(Rational c) {
    if (c != Rational(0)) coeffs_.push_back(c);
}

QPoly QPoly::monomial(Rational c, int degree) {
    QPoly p;
    if (c != Rational(0)) {
        p.coeffs_.assign(static_cast<std::size_t>(degree) + 1, Rational(0));
        p.coeffs_.back() = c;
    }
    return p;
}

void QPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == Rational(0)) coeffs_.pop_back();
}

Rational QPoly::coeff(int i) const {
    return i >= 0 && i < static_cast<int>(coeffs_.size()) ? coeffs_[static_cast<std::size_t>(i)] : Rational(0);
}

Rational QPoly::eval(Rational x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::string QPoly::str() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        Rational c = coeffs_[static_cast<std::size_t>(i)];
        if (c == Rational(0)) continue;
        const bool neg = c < Rational(0);
        if (neg) c = -c;
        if (!out.empty())
            out += neg ? " - " : " + ";
        else if (neg)
            out += "-";
        const bool unit = c == Rational(1) && i > 0;
        if (!unit) {
            out += std::to_string(c.numerator());
            if (c.denominator() != 1) out += "/" + std::to_string(c.denominator());
        }
        if (i > 0) {
            if (!unit) out += "*";
            out += "q";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

QPoly QPoly::operator+(const QPoly& o) const {
    QPoly r;
    r.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
    r.normalize();
    return r;
}

QPoly QPoly::operator-() const {
    QPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

QPoly QPoly::operator-(const QPoly& o) const { return *this + (-o); }

QPoly QPoly::operator*(const QPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    QPoly r;
    r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
    r.normalize();
    return r;
}

QPoly QPoly::pow(int k) const {
    QPoly r(1);
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
}

QPoly QPoly::divmod(const QPoly& d, QPoly& rem) const {
    if (d.is_zero()) throw Error(ErrorKind::Domain, "QPoly: division by zero");
    rem = *this;
    QPoly quot;
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
        const int shift = rem.degree() - d.degree();
        const QPoly term = monomial(rem.coeffs_.back() / d.coeffs_.back(), shift);
        quot += term;
        rem = rem - term * d;
    }
    return quot;
}

namespace {

// Recursive-descent parser over a stripped string.
class Parser {
public:
    explicit Parser(const std::string& s) {
        for (char c : s)
            if (!std::isspace(static_cast<unsigned char>(c))) text_ += c;
    }

    QPoly run() {
        QPoly p = expr();
        if (pos_ != text_.size()) fail("trailing input");
        return p;
    }

private:
    std::string text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& why) const {
        throw Error(ErrorKind::Parse, "QPoly parse error at " + std::to_string(pos_) + " in '" + text_ + "': " + why);
    }
    bool eat(char c) {
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    std::int64_t integer() {
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected integer");
        std::int64_t v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) v = v * 10 + (text_[pos_++] - '0');
        return v;
    }
    QPoly expr() {
        QPoly acc;
        bool first = true;
        while (true) {
            bool neg = false;
            if (eat('-'))
                neg = true;
            else if (!first && !eat('+'))
                break;
            QPoly t = term();
            acc += neg ? -t : t;
            first = false;
        }
        return acc;
    }
    QPoly term() {
        QPoly acc = power();
        while (eat('*')) acc = acc * power();
        return acc;
    }
    QPoly power() {
        QPoly base = atom();
        if (eat('^')) base = base.pow(static_cast<int>(integer()));
        return base;
    }
    QPoly atom() {
        if (eat('(')) {
            QPoly inner = expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (eat('q')) return QPoly::q();
        return QPoly(integer());
    }
};

}  // namespace

QPoly QPoly::parse(const std::string& text) { return Parser(text).run(); }

}  // namespace nilorb
