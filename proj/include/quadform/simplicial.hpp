#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "quadform/matrix.hpp"

namespace quadform {

class SimplicialComplex;
using ComplexPtr = std::shared_ptr<const SimplicialComplex>;

// Finite ordered simplicial complex.  Vertices are 0..n-1 and every simplex
// is stored as its sorted vertex tuple; the global vertex order also orders
// the simplex bases, which is what the cochain-level products rely on.
class SimplicialComplex {
 public:
  SimplicialComplex(int vertices, std::vector<std::vector<int>> facets, std::string name = "")
      : num_vertices_(vertices), name_(std::move(name)) {
    std::set<std::vector<int>> faces;
    for (auto f : facets) {
      std::sort(f.begin(), f.end());
      if (std::adjacent_find(f.begin(), f.end()) != f.end())
        throw std::invalid_argument("facet with repeated vertex");
      if (f.empty() || f.front() < 0 || f.back() >= vertices)
        throw std::invalid_argument("facet vertex out of range");
      // close under subsets
      const int m = static_cast<int>(f.size());
      for (unsigned mask = 1; mask < (1u << m); ++mask) {
        std::vector<int> s;
        for (int b = 0; b < m; ++b)
          if (mask & (1u << b)) s.push_back(f[b]);
        faces.insert(std::move(s));
      }
      facets_.push_back(std::move(f));
    }
    std::sort(facets_.begin(), facets_.end());
    facets_.erase(std::unique(facets_.begin(), facets_.end()), facets_.end());
    int dim = -1;
    for (const auto& s : faces) dim = std::max<int>(dim, static_cast<int>(s.size()) - 1);
    simplices_.assign(dim + 1, {});
    for (const auto& s : faces) simplices_[s.size() - 1].push_back(s);
    index_.resize(dim + 1);
    for (int d = 0; d <= dim; ++d) {
      std::sort(simplices_[d].begin(), simplices_[d].end());
      for (int i = 0; i < static_cast<int>(simplices_[d].size()); ++i)
        index_[d].emplace(simplices_[d][i], i);
    }
    build_boundaries();
  }

  int num_vertices() const { return num_vertices_; }
  int dim() const { return static_cast<int>(simplices_.size()) - 1; }
  const std::vector<std::vector<int>>& facets() const { return facets_; }
  const std::string& name() const { return name_; }

  int num_simplices(int d) const {
    if (d < 0 || d > dim()) return 0;
    return static_cast<int>(simplices_[d].size());
  }
  const std::vector<std::vector<int>>& simplices(int d) const {
    static const std::vector<std::vector<int>> empty;
    if (d < 0 || d > dim()) return empty;
    return simplices_[d];
  }
  // -1 when the tuple is not a simplex (input must be sorted)
  int index_of(int d, const std::vector<int>& sorted_verts) const {
    if (d < 0 || d > dim()) return -1;
    auto it = index_[d].find(sorted_verts);
    return it == index_[d].end() ? -1 : it->second;
  }

  // boundary matrix C_d -> C_{d-1}; zero-size matrices outside 1..dim
  const IntMatrix& boundary(int d) const {
    static const IntMatrix empty;
    if (d < 1 || d > dim()) return empty;
    return boundaries_[d - 1];
  }
  // coboundary matrix C^d -> C^{d+1} (transpose of boundary(d+1))
  IntMatrix coboundary_matrix(int d) const {
    if (d < 0 || d + 1 > dim()) return IntMatrix(num_simplices(d + 1), num_simplices(d));
    return boundary(d + 1).transposed();
  }

  bool is_pure() const {
    for (const auto& f : facets_)
      if (static_cast<int>(f.size()) - 1 != dim()) return false;
    return true;
  }

  // closed pseudo-manifold: pure, strongly usable ridge condition (every
  // (n-1)-simplex in exactly two facets) and facet-connected
  bool is_closed_pseudomanifold() const {
    if (dim() < 1 || !is_pure()) return false;
    const int n = dim();
    std::map<std::vector<int>, std::vector<int>> star;
    for (int fi = 0; fi < static_cast<int>(facets_.size()); ++fi) {
      const auto& f = facets_[fi];
      for (std::size_t k = 0; k < f.size(); ++k) {
        std::vector<int> r = f;
        r.erase(r.begin() + static_cast<long>(k));
        star[r].push_back(fi);
      }
    }
    for (const auto& [r, fs] : star)
      if (fs.size() != 2) return false;
    // facet connectivity through ridges
    std::vector<int> comp(facets_.size(), -1);
    std::vector<int> stack{0};
    comp[0] = 0;
    while (!stack.empty()) {
      int f = stack.back();
      stack.pop_back();
      for (std::size_t k = 0; k < facets_[f].size(); ++k) {
        std::vector<int> r = facets_[f];
        r.erase(r.begin() + static_cast<long>(k));
        for (int g : star[r])
          if (comp[g] < 0) {
            comp[g] = 0;
            stack.push_back(g);
          }
      }
    }
    for (int c : comp)
      if (c < 0) return false;
    (void)n;
    return true;
  }

  // signs per facet making the top chain a cycle; nullopt if non-orientable
  std::optional<std::vector<Int>> orientation() const {
    if (!is_closed_pseudomanifold()) return std::nullopt;
    const int n = dim();
    std::map<std::vector<int>, std::vector<std::pair<int, int>>> star;  // ridge -> (facet, sign)
    for (int fi = 0; fi < static_cast<int>(facets_.size()); ++fi) {
      const auto& f = facets_[fi];
      for (std::size_t k = 0; k < f.size(); ++k) {
        std::vector<int> r = f;
        r.erase(r.begin() + static_cast<long>(k));
        star[r].push_back({fi, (k % 2 == 0) ? 1 : -1});
      }
    }
    std::vector<Int> eps(facets_.size(), Int(0));
    std::vector<int> stack{0};
    eps[0] = 1;
    while (!stack.empty()) {
      int f = stack.back();
      stack.pop_back();
      for (std::size_t k = 0; k < facets_[f].size(); ++k) {
        std::vector<int> r = facets_[f];
        r.erase(r.begin() + static_cast<long>(k));
        const auto& pair = star[r];
        int sf = pair[0].first == f ? pair[0].second : pair[1].second;
        int g = pair[0].first == f ? pair[1].first : pair[0].first;
        int sg = pair[0].first == f ? pair[1].second : pair[0].second;
        Int need = -eps[f] * sf * sg;  // eps_f*sf + eps_g*sg = 0
        if (eps[g] == 0) {
          eps[g] = need;
          stack.push_back(g);
        } else if (eps[g] != need) {
          return std::nullopt;
        }
      }
    }
    (void)n;
    return eps;
  }

 private:
  void build_boundaries() {
    boundaries_.clear();
    for (int d = 1; d <= dim(); ++d) {
      IntMatrix B(num_simplices(d - 1), num_simplices(d));
      for (int j = 0; j < num_simplices(d); ++j) {
        const auto& s = simplices_[d][j];
        for (int k = 0; k <= d; ++k) {
          std::vector<int> face = s;
          face.erase(face.begin() + k);
          int i = index_of(d - 1, face);
          B(i, j) += (k % 2 == 0) ? Int(1) : Int(-1);
        }
      }
      boundaries_.push_back(std::move(B));
    }
  }

  int num_vertices_;
  std::string name_;
  std::vector<std::vector<int>> facets_;
  std::vector<std::vector<std::vector<int>>> simplices_;  // per dim, sorted
  std::vector<std::map<std::vector<int>, int>> index_;
  std::vector<IntMatrix> boundaries_;
};

inline ComplexPtr make_complex(int vertices, std::vector<std::vector<int>> facets,
                               std::string name = "") {
  return std::make_shared<SimplicialComplex>(vertices, std::move(facets), std::move(name));
}

// chain with coefficients in T
template <typename T>
struct Chain {
  ComplexPtr cx;
  int degree{0};
  std::vector<T> coeffs;
};

// Top-degree integer cycle generating H_n; requires orientability.
inline Chain<Int> fundamental_cycle_z(const ComplexPtr& cx, bool reversed = false) {
  auto ori = cx->orientation();
  if (!ori) throw std::invalid_argument("fundamental_cycle_z: not an orientable closed pseudomanifold");
  Chain<Int> c{cx, cx->dim(), std::vector<Int>(cx->num_simplices(cx->dim()), Int(0))};
  const auto& facets = cx->facets();
  for (std::size_t i = 0; i < facets.size(); ++i) {
    int idx = cx->index_of(cx->dim(), facets[i]);
    c.coeffs[idx] = reversed ? -(*ori)[i] : (*ori)[i];
  }
  return c;
}

inline Chain<F2> fundamental_cycle_f2(const ComplexPtr& cx) {
  if (!cx->is_closed_pseudomanifold())
    throw std::invalid_argument("fundamental_cycle_f2: not a closed pseudomanifold");
  Chain<F2> c{cx, cx->dim(), std::vector<F2>(cx->num_simplices(cx->dim()), F2(1))};
  return c;
}

}  // namespace quadform
