#include "dworkhg/monomial.hpp"

#include <numeric>
#include <sstream>

namespace dworkhg {

Monomial::Monomial(std::vector<int> exponents) : w_(std::move(exponents)) {
    int n = static_cast<int>(w_.size());
    if (n < 2)
        throw Error(ErrorCode::ParseError, "monomial needs at least 2 exponents");
    int s = 0;
    for (int e : w_) {
        if (e < 0)
            throw Error(ErrorCode::ParseError, "negative exponent in monomial");
        s += e;
    }
    if (s % n != 0)
        throw Error(ErrorCode::ParseError,
                    "exponent sum " + std::to_string(s) + " is not divisible by n = " +
                        std::to_string(n));
}

Monomial Monomial::parse(const std::string& csv) {
    std::vector<int> exps;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(item, &pos);
        } catch (const std::exception&) {
            throw Error(ErrorCode::ParseError, "bad exponent '" + item + "' in '" + csv + "'");
        }
        while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
        if (pos != item.size())
            throw Error(ErrorCode::ParseError, "bad exponent '" + item + "' in '" + csv + "'");
        exps.push_back(v);
    }
    if (exps.empty())
        throw Error(ErrorCode::ParseError, "empty monomial '" + csv + "'");
    return Monomial(std::move(exps));
}

int Monomial::sum() const { return std::accumulate(w_.begin(), w_.end(), 0); }

std::string Monomial::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < w_.size(); ++i) {
        if (i) os << ",";
        os << w_[i];
    }
    return os.str();
}

bool is_basis_monomial(const Monomial& w) {
    for (int e : w.exponents())
        if (e < 1 || e > w.n() - 1) return false;
    return true;
}

Combination::Combination(const std::map<std::vector<int>, RationalFunction>& by_mono) {
    terms_.reserve(by_mono.size());
    for (const auto& [exps, coeff] : by_mono) {
        if (coeff.is_zero()) continue;
        terms_.push_back(Term{coeff, Monomial(exps)});
    }
}

RationalFunction Combination::coefficient_of(const Monomial& m) const {
    for (const auto& t : terms_)
        if (t.mono == m) return t.coeff;
    return RationalFunction();
}

bool Combination::operator==(const Combination& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (!(terms_[i].mono == o.terms_[i].mono) || !(terms_[i].coeff == o.terms_[i].coeff))
            return false;
    return true;
}

std::string Combination::str(const std::string& var) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    for (size_t i = 0; i < terms_.size(); ++i) {
        if (i) os << " + ";
        os << "(" << terms_[i].coeff.str(var) << ") * [" << terms_[i].mono.str() << "]";
    }
    return os.str();
}

Combination operator*(const RationalFunction& c, const Combination& comb) {
    std::map<std::vector<int>, RationalFunction> scaled;
    for (const auto& t : comb.terms()) scaled[t.mono.exponents()] = c * t.coeff;
    return Combination(scaled);
}

}  // namespace dworkhg
