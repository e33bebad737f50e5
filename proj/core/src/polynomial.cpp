#include "f4rep/polynomial.hpp"

#include <cctype>
#include <sstream>

namespace f4rep
{

namespace
{

void check_var(int i)
{
    if (i < 1 || i > kNumVars)
        throw std::out_of_range("variable index must be in 1..26");
}

std::string coefficient_prefix(const Rational &a, bool unit_body)
{
    // a is positive here
    if (a == 1 && unit_body)
        return "";
    return to_string(a);
}

class Parser
{
public:
    explicit Parser(const std::string &text) : s_(text) {}

    bool at_end()
    {
        skip_ws();
        return pos_ >= s_.size();
    }

    // Reads an optional sign (mandatory between terms) and a coefficient.
    Rational read_sign_and_coefficient(bool first)
    {
        skip_ws();
        int sign = 1;
        if (peek() == '+' || peek() == '-') {
            sign = peek() == '-' ? -1 : 1;
            ++pos_;
        } else if (!first) {
            fail("expected '+' or '-'");
        }
        skip_ws();
        Rational c = 1;
        had_number_ = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            had_number_ = true;
            std::string num = read_digits();
            if (peek() == '/') {
                ++pos_;
                num += "/" + read_digits();
            }
            c = parse_rational(num);
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                skip_ws();
            }
        }
        return sign * c;
    }

    Monomial read_monomial()
    {
        Monomial m;
        while (peek() == 'x') {
            ++pos_;
            int v = read_int();
            if (v < 1 || v > kNumVars)
                fail("variable index out of range");
            int e = 1;
            if (peek() == '^') {
                ++pos_;
                e = read_int();
            }
            m.set_exponent(v, m.exponent(v) + e);
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                skip_ws();
            }
        }
        return m;
    }

    int read_partial()
    {
        if (peek() != 'd')
            fail("expected 'd'");
        ++pos_;
        int v = read_int();
        if (v < 1 || v > kNumVars)
            fail("variable index out of range");
        return v;
    }

    bool had_number() const { return had_number_; }

    [[noreturn]] void fail(const std::string &what) const
    {
        std::ostringstream msg;
        msg << "parse error at offset " << pos_ << ": " << what << " in \"" << s_ << "\"";
        throw std::invalid_argument(msg.str());
    }

private:
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

    void skip_ws()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    std::string read_digits()
    {
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek())))
            ++pos_;
        if (start == pos_)
            fail("expected digits");
        return s_.substr(start, pos_ - start);
    }

    int read_int() { return std::stoi(read_digits()); }

    const std::string &s_;
    std::size_t pos_ = 0;
    bool had_number_ = false;
};

void enumerate_monomials(int var, int remaining, Monomial &cur, std::vector<Monomial> &out)
{
    if (var == kNumVars) {
        cur.set_exponent(var, remaining);
        out.push_back(cur);
        cur.set_exponent(var, 0);
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        cur.set_exponent(var, e);
        enumerate_monomials(var + 1, remaining - e, cur, out);
    }
    cur.set_exponent(var, 0);
}

} // namespace

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::variable(int i)
{
    Monomial m;
    m.set_exponent(i, 1);
    return m;
}

int Monomial::exponent(int i) const
{
    check_var(i);
    return e_[i - 1];
}

void Monomial::set_exponent(int i, int value)
{
    check_var(i);
    if (value < 0 || value > 255)
        throw std::out_of_range("exponent must be in 0..255");
    e_[i - 1] = static_cast<std::uint8_t>(value);
}

int Monomial::degree() const
{
    int d = 0;
    for (auto v : e_)
        d += v;
    return d;
}

Monomial Monomial::operator*(const Monomial &o) const
{
    Monomial r;
    for (int i = 0; i < kNumVars; ++i) {
        int v = e_[i] + o.e_[i];
        if (v > 255)
            throw std::overflow_error("monomial exponent overflow");
        r.e_[i] = static_cast<std::uint8_t>(v);
    }
    return r;
}

std::string Monomial::to_string() const
{
    std::string s;
    for (int i = 0; i < kNumVars; ++i) {
        if (!e_[i])
            continue;
        s += "x" + std::to_string(i + 1);
        if (e_[i] > 1)
            s += "^" + std::to_string(e_[i]);
    }
    return s.empty() ? "1" : s;
}

bool GrlexOrder::operator()(const Monomial &a, const Monomial &b) const
{
    int da = a.degree(), db = b.degree();
    if (da != db)
        return da > db;
    return a.exponents() > b.exponents();
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(const Rational &c) { add_term(Monomial(), c); }

Polynomial Polynomial::variable(int i, const Rational &c) { return monomial(Monomial::variable(i), c); }

Polynomial Polynomial::monomial(const Monomial &m, const Rational &c)
{
    Polynomial p;
    p.add_term(m, c);
    return p;
}

Rational Polynomial::coefficient(const Monomial &m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::degree() const
{
    // grlex puts the highest degree first
    return terms_.empty() ? -1 : terms_.begin()->first.degree();
}

bool Polynomial::is_homogeneous() const
{
    if (terms_.empty())
        return true;
    return terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

void Polynomial::add_term(const Monomial &m, const Rational &c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Polynomial &Polynomial::operator+=(const Polynomial &o)
{
    for (const auto &[m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

Polynomial &Polynomial::operator-=(const Polynomial &o)
{
    for (const auto &[m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

Polynomial &Polynomial::operator*=(const Rational &s)
{
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto &[m, c] : terms_)
        c *= s;
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial &o) const
{
    Polynomial r(*this);
    return r += o;
}

Polynomial Polynomial::operator-(const Polynomial &o) const
{
    Polynomial r(*this);
    return r -= o;
}

Polynomial Polynomial::operator-() const
{
    Polynomial r(*this);
    return r *= -1;
}

Polynomial Polynomial::operator*(const Polynomial &o) const
{
    Polynomial r;
    for (const auto &[a, ca] : terms_)
        for (const auto &[b, cb] : o.terms_)
            r.add_term(a * b, ca * cb);
    return r;
}

Polynomial Polynomial::pow(unsigned n) const
{
    Polynomial result(1);
    Polynomial base(*this);
    while (n) {
        if (n & 1u)
            result = result * base;
        n >>= 1;
        if (n)
            base = base * base;
    }
    return result;
}

std::string Polynomial::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string s;
    bool first = true;
    for (const auto &[m, c] : terms_) {
        if (first)
            s += c < 0 ? "-" : "";
        else
            s += c < 0 ? " - " : " + ";
        first = false;
        Rational a = abs(c);
        if (m.is_one())
            s += f4rep::to_string(a);
        else
            s += coefficient_prefix(a, true) + m.to_string();
    }
    return s;
}

Polynomial partial(const Polynomial &f, int var)
{
    check_var(var);
    Polynomial r;
    for (const auto &[m, c] : f.terms()) {
        int e = m.exponent(var);
        if (!e)
            continue;
        Monomial d = m;
        d.set_exponent(var, e - 1);
        r.add_term(d, c * e);
    }
    return r;
}

int tau_index(int r)
{
    check_var(r);
    return (r == 13 || r == 14) ? r : 27 - r;
}

Polynomial tau(const Polynomial &f)
{
    Polynomial r;
    for (const auto &[m, c] : f.terms()) {
        Monomial t;
        for (int i = 1; i <= kNumVars; ++i)
            t.set_exponent(tau_index(i), m.exponent(i));
        bool odd = (m.exponent(13) + m.exponent(14)) % 2 != 0;
        r.add_term(t, odd ? Rational(-c) : c);
    }
    return r;
}

// ---------------------------------------------------------------------------
// Derivation

Derivation Derivation::term(const Polynomial &coef, int var)
{
    Derivation d;
    d.add_term(coef, var);
    return d;
}

void Derivation::add_term(const Polynomial &coef, int var)
{
    check_var(var);
    if (coef.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(var, coef);
    if (!inserted) {
        it->second += coef;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

Polynomial Derivation::coefficient(int var) const
{
    check_var(var);
    auto it = terms_.find(var);
    return it == terms_.end() ? Polynomial() : it->second;
}

Polynomial Derivation::apply(const Polynomial &f) const
{
    Polynomial r;
    for (const auto &[m, c] : f.terms())
        for (const auto &[var, coef] : terms_) {
            int e = m.exponent(var);
            if (!e)
                continue;
            Monomial rest = m;
            rest.set_exponent(var, e - 1);
            Rational s = c * e;
            for (const auto &[cm, cc] : coef.terms())
                r.add_term(rest * cm, s * cc);
        }
    return r;
}

Derivation &Derivation::operator+=(const Derivation &o)
{
    for (const auto &[v, c] : o.terms_)
        add_term(c, v);
    return *this;
}

Derivation &Derivation::operator-=(const Derivation &o)
{
    for (const auto &[v, c] : o.terms_)
        add_term(-c, v);
    return *this;
}

Derivation &Derivation::operator*=(const Rational &s)
{
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto &[v, c] : terms_)
        c *= s;
    return *this;
}

Derivation Derivation::operator+(const Derivation &o) const
{
    Derivation r(*this);
    return r += o;
}

Derivation Derivation::operator-(const Derivation &o) const
{
    Derivation r(*this);
    return r -= o;
}

Derivation Derivation::operator-() const
{
    Derivation r(*this);
    return r *= -1;
}

std::string Derivation::to_string() const
{
    if (terms_.empty())
        return "0";
    // Collect (monomial, var) pairs ordered by coefficient monomial, then var.
    std::map<std::pair<Monomial, int>, Rational, bool (*)(const std::pair<Monomial, int> &,
                                                        const std::pair<Monomial, int> &)>
        ordered([](const std::pair<Monomial, int> &a, const std::pair<Monomial, int> &b) {
            if (a.first != b.first)
                return GrlexOrder{}(a.first, b.first);
            return a.second < b.second;
        });
    for (const auto &[v, coef] : terms_)
        for (const auto &[m, c] : coef.terms())
            ordered[{m, v}] += c;
    std::string s;
    bool first = true;
    for (const auto &[key, c] : ordered) {
        if (first)
            s += c < 0 ? "-" : "";
        else
            s += c < 0 ? " - " : " + ";
        first = false;
        Rational a = abs(c);
        if (key.first.is_one())
            s += f4rep::to_string(a);
        else
            s += coefficient_prefix(a, true) + key.first.to_string();
        s += "d" + std::to_string(key.second);
    }
    return s;
}

Derivation commutator(const Derivation &d1, const Derivation &d2)
{
    Derivation r;
    for (const auto &[v, c] : d2.terms())
        r.add_term(d1.apply(c), v);
    for (const auto &[v, c] : d1.terms())
        r.add_term(-d2.apply(c), v);
    return r;
}

Derivation tau_op(const Derivation &d)
{
    // (tau D tau)(x_{tau j}) = s_j tau(D x_j), with s_j = -1 for j in {13, 14}.
    Derivation r;
    for (const auto &[v, c] : d.terms()) {
        Polynomial img = tau(c);
        if (v == 13 || v == 14)
            img *= -1;
        r.add_term(img, tau_index(v));
    }
    return r;
}

// ---------------------------------------------------------------------------
// Weights

std::string to_string(const WeightVector &w)
{
    std::ostringstream os;
    os << "(" << w[0] << "," << w[1] << "," << w[2] << "," << w[3] << ")";
    return os.str();
}

bool is_dominant(const WeightVector &w)
{
    for (int v : w)
        if (v < 0)
            return false;
    return true;
}

WeightVector operator+(const WeightVector &a, const WeightVector &b)
{
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}

VariableWeights weights_from_cartan(const std::array<Derivation, 4> &cartan)
{
    VariableWeights w{};
    for (int k = 0; k < 4; ++k)
        for (int r = 1; r <= kNumVars; ++r) {
            const Polynomial img = cartan[k].coefficient(r);
            const Rational c = img.coefficient(Monomial::variable(r));
            if (!(img - Polynomial::variable(r, c)).is_zero())
                throw std::invalid_argument("Cartan operator is not diagonal on x" + std::to_string(r));
            if (c.get_den() != 1)
                throw std::invalid_argument("non-integral weight on x" + std::to_string(r));
            w[r - 1][k] = static_cast<int>(c.get_num().get_si());
        }
    return w;
}

WeightVector monomial_weight(const Monomial &m, const VariableWeights &w)
{
    WeightVector out{};
    for (int r = 0; r < kNumVars; ++r) {
        int e = m.exponents()[r];
        if (!e)
            continue;
        for (int k = 0; k < 4; ++k)
            out[k] += e * w[r][k];
    }
    return out;
}

WeightMismatchError::WeightMismatchError(const WeightVector &first, const WeightVector &second)
    : std::domain_error("polynomial is not a weight vector: terms of weight " + to_string(first) + " and " +
                        to_string(second)),
      first_(first), second_(second)
{
}

WeightVector weight(const Polynomial &f, const VariableWeights &w)
{
    if (f.is_zero())
        throw std::domain_error("the zero polynomial has no weight");
    auto it = f.terms().begin();
    const WeightVector first = monomial_weight(it->first, w);
    for (++it; it != f.terms().end(); ++it) {
        WeightVector other = monomial_weight(it->first, w);
        if (other != first)
            throw WeightMismatchError(first, other);
    }
    return first;
}

std::vector<Monomial> monomials_of_degree(int k)
{
    if (k < 0)
        throw std::invalid_argument("degree must be nonnegative");
    std::vector<Monomial> out;
    Monomial cur;
    enumerate_monomials(1, k, cur, out);
    return out;
}

std::map<WeightVector, std::vector<Monomial>> weight_decomposition(int k, const VariableWeights &w)
{
    std::map<WeightVector, std::vector<Monomial>> out;
    for (const auto &m : monomials_of_degree(k))
        out[monomial_weight(m, w)].push_back(m);
    return out;
}

std::vector<Monomial> weight_subspace_basis(int k, const WeightVector &target, const VariableWeights &w)
{
    std::vector<Monomial> out;
    for (const auto &m : monomials_of_degree(k))
        if (monomial_weight(m, w) == target)
            out.push_back(m);
    return out;
}

// ---------------------------------------------------------------------------
// SecondOrderOperator

void SecondOrderOperator::add_term(const Rational &c, int i, int j)
{
    check_var(i);
    check_var(j);
    if (c != 0)
        terms_.push_back({c, i, j});
}

Polynomial SecondOrderOperator::apply(const Polynomial &f) const
{
    Polynomial r;
    for (const auto &t : terms_) {
        Polynomial g = partial(partial(f, t.j), t.i);
        g *= t.coef;
        r += g;
    }
    return r;
}

std::string SecondOrderOperator::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string s;
    bool first = true;
    for (const auto &t : terms_) {
        if (first)
            s += t.coef < 0 ? "-" : "";
        else
            s += t.coef < 0 ? " - " : " + ";
        first = false;
        s += coefficient_prefix(abs(t.coef), true) + "d" + std::to_string(t.i) + "d" + std::to_string(t.j);
    }
    return s;
}

// ---------------------------------------------------------------------------
// Parsing

Polynomial parse_polynomial(const std::string &text)
{
    Parser p(text);
    Polynomial out;
    bool first = true;
    if (p.at_end())
        p.fail("empty polynomial");
    while (!p.at_end()) {
        Rational c = p.read_sign_and_coefficient(first);
        Monomial m = p.read_monomial();
        if (m.is_one() && !p.had_number())
            p.fail("expected a term");
        out.add_term(m, c);
        first = false;
    }
    return out;
}

Derivation parse_derivation(const std::string &text)
{
    Parser p(text);
    Derivation out;
    bool first = true;
    while (!p.at_end()) {
        Rational c = p.read_sign_and_coefficient(first);
        Monomial m = p.read_monomial();
        int v = p.read_partial();
        out.add_term(Polynomial::monomial(m, c), v);
        first = false;
    }
    return out;
}

} // namespace f4rep
