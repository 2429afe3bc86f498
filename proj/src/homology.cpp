#include "kgraph/homology.hpp"

#include <numeric>
#include <unordered_map>

namespace kgraph {

namespace {

void require_valid(const std::vector<VertexSetReport>& reports) {
  if (reports.empty()) return;
  std::string what = "model fails " + reports.front().predicate;
  for (const auto& w : reports.front().witness) what += " " + w;
  throw Error(ErrorCode::InvalidModel, what);
}

template <class Model>
ChainComplex build(const Model& model) {
  const std::size_t k = model_rank(model);
  ChainComplex out;
  for (std::size_t n = 0; n <= k; ++n) out.basis.push_back(cubes(model, n));

  out.boundary.emplace_back(0, out.basis[0].size());
  for (std::size_t n = 1; n <= k; ++n) {
    std::unordered_map<std::string, std::size_t> row_of;
    for (std::size_t i = 0; i < out.basis[n - 1].size(); ++i) row_of[out.basis[n - 1][i].id] = i;
    SparseIntMatrix d(out.basis[n - 1].size(), out.basis[n].size());
    for (std::size_t c = 0; c < out.basis[n].size(); ++c) {
      const Cube& cube = out.basis[n][c];
      const auto support = cube.degree.unit_support();
      for (std::size_t j = 1; j <= support.size(); ++j) {
        const long sign = j % 2 ? -1 : 1;
        d.add(row_of.at(face(model, cube, support[j - 1], Side::One).id), c, sign);
        d.add(row_of.at(face(model, cube, support[j - 1], Side::Zero).id), c, -sign);
      }
    }
    out.boundary.push_back(std::move(d));
  }
  return out;
}

}  // namespace

std::string HomologyGroup::to_string() const {
  std::string out;
  if (betti == 1) out = "Z";
  if (betti > 1) out = "Z^" + std::to_string(betti);
  for (const auto& t : torsion) {
    if (!out.empty()) out += " + ";
    out += "Z/" + t.get_str();
  }
  return out.empty() ? "0" : out;
}

ChainComplex chain_complex(const FiniteKGraph& graph, bool validate) {
  if (validate) require_valid(validate_kgraph(graph));
  return build(graph);
}

ChainComplex chain_complex(const Skeleton2Graph& skeleton, bool validate) {
  if (validate) require_valid(validate_skeleton(skeleton));
  return build(skeleton);
}

std::vector<HomologyGroup> homology(const ChainComplex& complex) {
  const std::size_t top = complex.basis.size();
  std::vector<SnfResult> snf;
  for (const auto& d : complex.boundary) snf.push_back(smith_normal_form(d));
  std::vector<HomologyGroup> out(top);
  for (std::size_t n = 0; n < top; ++n) {
    const std::size_t rank_out = snf[n].rank;
    const std::size_t rank_in = n + 1 < top ? snf[n + 1].rank : 0;
    out[n].betti = complex.basis[n].size() - rank_out - rank_in;
    if (n + 1 < top) {
      for (const auto& d : snf[n + 1].diagonal) {
        if (d > 1) out[n].torsion.push_back(d);
      }
    }
  }
  return out;
}

ChainComplex permute_basis(const ChainComplex& complex,
                           const std::vector<std::vector<std::size_t>>& perms) {
  const std::size_t top = complex.basis.size();
  // new position of each old cube, per dimension
  std::vector<std::vector<std::size_t>> position(top);
  ChainComplex out;
  for (std::size_t n = 0; n < top; ++n) {
    const auto& p = perms.at(n);
    position[n].resize(p.size());
    std::vector<Cube> basis;
    for (std::size_t i = 0; i < p.size(); ++i) {
      basis.push_back(complex.basis[n].at(p[i]));
      position[n][p[i]] = i;
    }
    out.basis.push_back(std::move(basis));
  }
  for (std::size_t n = 0; n < top; ++n) {
    const auto& d = complex.boundary[n];
    SparseIntMatrix m(d.rows(), d.cols());
    for (std::size_t c = 0; c < d.cols(); ++c) {
      for (const auto& [r, v] : d.column(c)) m.add(position[n - 1][r], position[n][c], v);
    }
    out.boundary.push_back(std::move(m));
  }
  return out;
}

bool boundary_squares_to_zero(const ChainComplex& complex) {
  for (std::size_t n = 2; n < complex.boundary.size(); ++n) {
    if (!(complex.boundary[n - 1] * complex.boundary[n]).is_zero()) return false;
  }
  return true;
}

long euler_characteristic(const ChainComplex& complex) {
  long chi = 0;
  for (std::size_t n = 0; n < complex.basis.size(); ++n) {
    const long size = static_cast<long>(complex.basis[n].size());
    chi += n % 2 ? -size : size;
  }
  return chi;
}

long euler_characteristic(const std::vector<HomologyGroup>& groups) {
  long chi = 0;
  for (std::size_t n = 0; n < groups.size(); ++n) {
    const long b = static_cast<long>(groups[n].betti);
    chi += n % 2 ? -b : b;
  }
  return chi;
}

}  // namespace kgraph
