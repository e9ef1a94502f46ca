#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <algorithm>
#include <cmath>
#include <numeric>

#include "rahecke/analysis.hpp"

namespace rahecke {

namespace {

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void join(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

using Sparse = Eigen::SparseMatrix<double>;

double dense_norm(const Sparse& a) {
  // Gram matrix on the smaller side.
  Eigen::MatrixXd g = a.rows() <= a.cols() ? Eigen::MatrixXd(a * a.transpose()) : Eigen::MatrixXd(a.transpose() * a);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g, Eigen::EigenvaluesOnly);
  double lam = es.eigenvalues().size() ? es.eigenvalues().maxCoeff() : 0.0;
  return std::sqrt(std::max(lam, 0.0));
}

double power_norm(const Sparse& a) {
  Eigen::VectorXd v(a.cols());
  for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = 1.0 + 0.01 * static_cast<double>((i * 7919) % 13) / 13.0;
  v.normalize();
  double best = 0.0;
  double prev = -1.0;
  for (int it = 0; it < 2000; ++it) {
    Eigen::VectorXd av = a * v;
    double lam = av.squaredNorm();
    best = std::max(best, lam);
    Eigen::VectorXd w = a.transpose() * av;
    double nw = w.norm();
    if (nw == 0.0) break;
    v = w / nw;
    if (prev >= 0.0 && std::abs(lam - prev) <= 1e-14 * lam) break;
    prev = lam;
  }
  return std::sqrt(best);
}

}  // namespace

SpectralNorm spectral_norm(const SparseMatrixD& m, std::size_t dense_limit) {
  SpectralNorm out;
  std::vector<const SparseEntry*> nz;
  for (const auto& e : m.entries) {
    if (e.value != 0.0) nz.push_back(&e);
  }
  if (nz.empty()) return out;
  DisjointSets ds(m.rows + m.cols);
  for (const auto* e : nz) ds.join(e->row, m.rows + e->col);

  // Group entries by component root and renumber rows and columns locally.
  std::unordered_map<std::size_t, std::size_t> comp_of_root;
  std::vector<std::vector<const SparseEntry*>> comps;
  for (const auto* e : nz) {
    std::size_t root = ds.find(e->row);
    auto [it, fresh] = comp_of_root.try_emplace(root, comps.size());
    if (fresh) comps.emplace_back();
    comps[it->second].push_back(e);
  }
  out.components = comps.size();
  for (const auto& comp : comps) {
    std::unordered_map<std::size_t, int> rid, cid;
    std::vector<Eigen::Triplet<double>> trips;
    trips.reserve(comp.size());
    for (const auto* e : comp) {
      auto r = rid.try_emplace(e->row, static_cast<int>(rid.size())).first->second;
      auto c = cid.try_emplace(e->col, static_cast<int>(cid.size())).first->second;
      trips.emplace_back(r, c, e->value);
    }
    Sparse a(static_cast<Eigen::Index>(rid.size()), static_cast<Eigen::Index>(cid.size()));
    a.setFromTriplets(trips.begin(), trips.end());
    std::size_t side = std::min(rid.size(), cid.size());
    out.largest_component = std::max(out.largest_component, rid.size() + cid.size());
    double v;
    if (side <= dense_limit) {
      v = dense_norm(a);
    } else {
      v = power_norm(a);
      out.exact = false;
    }
    out.value = std::max(out.value, v);
  }
  return out;
}

}  // namespace rahecke
