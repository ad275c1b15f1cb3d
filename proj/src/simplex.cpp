#include "tcat/simplex.hpp"

#include <sstream>
#include <stdexcept>

namespace tcat {

SimplexMap::SimplexMap(int dom, int cod, std::vector<int> values)
    : dom_(dom), cod_(cod), values_(std::move(values)) {
    if (dom_ < 0 || cod_ < 0) throw std::invalid_argument("SimplexMap: negative ordinal");
    if (static_cast<int>(values_.size()) != dom_ + 1)
        throw std::invalid_argument("SimplexMap: value table has wrong length");
    int prev = 0;
    for (int i = 0; i <= dom_; ++i) {
        int v = values_[i];
        if (v < 0 || v > cod_) throw std::invalid_argument("SimplexMap: value out of range");
        if (i > 0 && v < prev) throw std::invalid_argument("SimplexMap: values not monotone");
        prev = v;
    }
}

SimplexMap SimplexMap::identity(int n) {
    std::vector<int> v(n + 1);
    for (int i = 0; i <= n; ++i) v[i] = i;
    return SimplexMap(n, n, std::move(v));
}

SimplexMap SimplexMap::face(int n, int i) {
    if (i < 0 || i > n + 1) throw std::invalid_argument("face: index out of range");
    std::vector<int> v(n + 1);
    for (int k = 0; k <= n; ++k) v[k] = k < i ? k : k + 1;
    return SimplexMap(n, n + 1, std::move(v));
}

SimplexMap SimplexMap::degeneracy(int n, int i) {
    if (i < 0 || i > n) throw std::invalid_argument("degeneracy: index out of range");
    std::vector<int> v(n + 2);
    for (int k = 0; k <= n + 1; ++k) v[k] = k <= i ? k : k - 1;
    return SimplexMap(n + 1, n, std::move(v));
}

SimplexMap SimplexMap::chi(int m, int j) {
    if (j < 0 || j > m + 1) throw std::invalid_argument("chi: index out of range");
    std::vector<int> v(m + 1);
    for (int i = 0; i <= m; ++i) v[i] = i < j ? 0 : 1;
    return SimplexMap(m, 1, std::move(v));
}

SimplexMap SimplexMap::constant(int m, int n, int value) {
    return SimplexMap(m, n, std::vector<int>(m + 1, value));
}

int SimplexMap::operator()(int k) const {
    if (k < 0 || k > dom_) throw std::out_of_range("SimplexMap: argument out of range");
    return values_[k];
}

bool SimplexMap::is_identity() const {
    if (dom_ != cod_) return false;
    for (int i = 0; i <= dom_; ++i)
        if (values_[i] != i) return false;
    return true;
}

bool SimplexMap::is_injective() const {
    for (int i = 1; i <= dom_; ++i)
        if (values_[i] == values_[i - 1]) return false;
    return true;
}

bool SimplexMap::is_top_preserving() const { return values_[dom_] == cod_; }

bool SimplexMap::operator==(const SimplexMap& other) const {
    return dom_ == other.dom_ && cod_ == other.cod_ && values_ == other.values_;
}

bool SimplexMap::operator<(const SimplexMap& other) const {
    if (dom_ != other.dom_) return dom_ < other.dom_;
    if (cod_ != other.cod_) return cod_ < other.cod_;
    return values_ < other.values_;
}

std::string SimplexMap::show() const {
    std::ostringstream out;
    out << '[' << dom_ << "]->[" << cod_ << "]:(";
    for (int i = 0; i <= dom_; ++i) {
        if (i) out << ',';
        out << values_[i];
    }
    out << ')';
    return out.str();
}

SimplexMap compose(const SimplexMap& g, const SimplexMap& f) {
    if (f.cod() != g.dom()) throw std::invalid_argument("compose: domain mismatch");
    std::vector<int> v(f.dom() + 1);
    for (int i = 0; i <= f.dom(); ++i) v[i] = g(f(i));
    return SimplexMap(f.dom(), g.cod(), std::move(v));
}

TopFactorization factorize(const SimplexMap& phi) {
    const int k = phi(phi.dom());
    SimplexMap top(phi.dom(), k, phi.values());
    std::vector<int> incl(k + 1);
    for (int i = 0; i <= k; ++i) incl[i] = i;
    return TopFactorization{k, std::move(top), SimplexMap(k, phi.cod(), std::move(incl))};
}

SimplexMap apply_UR(const SimplexMap& phi) {
    std::vector<int> v(phi.dom() + 2);
    for (int i = 0; i <= phi.dom(); ++i) v[i] = phi(i);
    v[phi.dom() + 1] = phi.cod() + 1;
    return SimplexMap(phi.dom() + 1, phi.cod() + 1, std::move(v));
}

SimplexMap apply_R(const SimplexMap& psi) {
    if (!psi.is_top_preserving())
        throw std::invalid_argument("apply_R: map is not top-preserving");
    return apply_UR(psi);
}

SimplexMap top_extension(const SimplexMap& theta) {
    std::vector<int> v(theta.dom() + 2);
    for (int i = 0; i <= theta.dom(); ++i) v[i] = theta(i);
    v[theta.dom() + 1] = theta.cod();
    return SimplexMap(theta.dom() + 1, theta.cod(), std::move(v));
}

std::vector<SimplexMap> enumerate_hom(int m, int n, HomKind which) {
    std::vector<SimplexMap> result;
    std::vector<int> current(m + 1, 0);
    while (true) {
        if (which == HomKind::Delta || current[m] == n)
            result.emplace_back(m, n, current);
        // next weakly increasing table, lexicographically
        int i = m;
        while (i >= 0 && current[i] == n) --i;
        if (i < 0) break;
        ++current[i];
        for (int j = i + 1; j <= m; ++j) current[j] = current[i];
    }
    return result;
}

}  // namespace tcat
