#include "f4rep/representation.hpp"

#include <algorithm>
#include <map>
#include <regex>
#include <stdexcept>

#include "typeset.hpp"

namespace f4rep
{

namespace
{

bool is_f4_positive_root(const std::array<int, 4> &c)
{
    const auto &roots = f4_positive_root_coeffs();
    return std::find(roots.begin(), roots.end(), c) != roots.end();
}

std::map<OperatorLabel, Derivation> build_oracle_table()
{
    std::map<OperatorLabel, Derivation> table;
    for (const auto &label : all_operator_labels())
        table.emplace(label, derivation_from_matrix(ad_on_V(operator_element(label))));
    return table;
}

} // namespace

OperatorLabel OperatorLabel::positive(const std::array<int, 4> &coeffs) { return from_root({coeffs, 1}); }

OperatorLabel OperatorLabel::negative(const std::array<int, 4> &coeffs) { return from_root({coeffs, -1}); }

OperatorLabel OperatorLabel::from_root(const F4RootLabel &label)
{
    if (!is_f4_positive_root(label.coeffs) || (label.sign != 1 && label.sign != -1))
        throw std::invalid_argument("unknown F4 root label " + label.to_string());
    OperatorLabel l;
    l.root = label;
    return l;
}

OperatorLabel OperatorLabel::cartan(int i)
{
    if (i < 1 || i > 4)
        throw std::invalid_argument("Cartan index must be in 1..4");
    OperatorLabel l;
    l.is_cartan = true;
    l.cartan_index = i;
    return l;
}

OperatorLabel OperatorLabel::simple(int i, int sign)
{
    if (i < 1 || i > 4)
        throw std::invalid_argument("simple root index must be in 1..4");
    std::array<int, 4> c{};
    c[i - 1] = 1;
    return sign > 0 ? positive(c) : negative(c);
}

OperatorLabel OperatorLabel::parse(const std::string &text)
{
    static const std::regex cartan_re(R"(\s*h([1-4])\s*)");
    static const std::regex root_re(R"(\s*E([+-]?)\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\)\s*)");
    std::smatch m;
    if (std::regex_match(text, m, cartan_re))
        return cartan(std::stoi(m[1]));
    if (std::regex_match(text, m, root_re)) {
        std::array<int, 4> c{std::stoi(m[2]), std::stoi(m[3]), std::stoi(m[4]), std::stoi(m[5])};
        return m[1] == "-" ? negative(c) : positive(c);
    }
    throw std::invalid_argument("cannot parse operator label \"" + text + "\"");
}

std::string OperatorLabel::to_string() const
{
    if (is_cartan)
        return "h" + std::to_string(cartan_index);
    std::string s = root.sign > 0 ? "E(" : "E-(";
    for (int i = 0; i < 4; ++i)
        s += (i ? "," : "") + std::to_string(root.coeffs[i]);
    return s + ")";
}

const std::vector<OperatorLabel> &all_operator_labels()
{
    static const std::vector<OperatorLabel> labels = [] {
        std::vector<OperatorLabel> v;
        for (const auto &c : f4_positive_root_coeffs())
            v.push_back(OperatorLabel::positive(c));
        for (const auto &c : f4_positive_root_coeffs())
            v.push_back(OperatorLabel::negative(c));
        for (int i = 1; i <= 4; ++i)
            v.push_back(OperatorLabel::cartan(i));
        return v;
    }();
    return labels;
}

AlgebraElement operator_element(const OperatorLabel &label)
{
    return label.is_cartan ? f4_cartan(label.cartan_index) : f4_root_vector(label.root);
}

Derivation derivation_from_matrix(const Matrix &m)
{
    if (m.rows() != kNumVars || m.cols() != kNumVars)
        throw std::invalid_argument("expected a 26x26 matrix");
    Derivation d;
    for (std::size_t j = 0; j < kNumVars; ++j)
        for (std::size_t i = 0; i < kNumVars; ++i)
            if (m(i, j) != 0)
                d.add_term(Polynomial::variable(static_cast<int>(i) + 1, m(i, j)), static_cast<int>(j) + 1);
    return d;
}

Matrix matrix_of(const Derivation &d)
{
    Matrix m(kNumVars, kNumVars);
    for (const auto &[var, coef] : d.terms())
        for (const auto &[mono, c] : coef.terms()) {
            if (mono.degree() != 1)
                throw std::invalid_argument("derivation has a non-linear coefficient");
            int i = 0;
            while (mono.exponent(i + 1) == 0)
                ++i;
            m(static_cast<std::size_t>(i), static_cast<std::size_t>(var - 1)) = c;
        }
    return m;
}

const Derivation &oracle_operator(const OperatorLabel &label)
{
    static const std::map<OperatorLabel, Derivation> table = build_oracle_table();
    auto it = table.find(label);
    if (it == table.end())
        throw std::invalid_argument("unknown operator label " + label.to_string());
    return it->second;
}

const std::string &transcribed_formula(const OperatorLabel &label)
{
    if (label.is_cartan)
        return typeset::cartan_operators().at(static_cast<std::size_t>(label.cartan_index - 1));
    for (const auto &f : typeset::root_operators())
        if (f.coeffs == label.root.coeffs)
            return f.formula;
    throw std::invalid_argument("unknown operator label " + label.to_string());
}

Derivation transcribed_operator(const OperatorLabel &label)
{
    Derivation d = parse_derivation(transcribed_formula(label));
    if (!label.is_cartan && label.root.sign < 0)
        return tau_op(d);
    return d;
}

std::vector<ErrataRecord> validate_table()
{
    std::vector<ErrataRecord> out;
    for (const auto &label : all_operator_labels()) {
        const Matrix t = matrix_of(transcribed_operator(label));
        const Matrix o = ad_on_V(operator_element(label));
        for (std::size_t j = 0; j < kNumVars; ++j)
            for (std::size_t i = 0; i < kNumVars; ++i)
                if (t(i, j) != o(i, j))
                    out.push_back({label, static_cast<int>(i) + 1, static_cast<int>(j) + 1, t(i, j), o(i, j)});
    }
    return out;
}

const VariableWeights &variable_weights()
{
    static const VariableWeights w = weights_from_cartan(
        {oracle_operator(OperatorLabel::cartan(1)), oracle_operator(OperatorLabel::cartan(2)),
         oracle_operator(OperatorLabel::cartan(3)), oracle_operator(OperatorLabel::cartan(4))});
    return w;
}

WeightVector weight(const Polynomial &f) { return weight(f, variable_weights()); }

std::vector<OperatorLabel> non_annihilating_operators(const Polynomial &f)
{
    std::vector<OperatorLabel> out;
    for (const auto &label : all_operator_labels())
        if (!oracle_operator(label).apply(f).is_zero())
            out.push_back(label);
    return out;
}

} // namespace f4rep
