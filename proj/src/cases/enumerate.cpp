#include <algorithm>
#include <set>
#include <thread>
#include <tuple>

#include "modspace/cases/cases.hpp"
#include "modspace/error.hpp"
#include "modspace/exact/linalg.hpp"

namespace modspace::cases {

using exact::Matrix;
using modcore::FramedModule;

namespace {

Matrix matrix_from_code(Field f, std::size_t rows, std::size_t cols, std::uint64_t code, std::uint64_t q) {
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j, code /= q) m(i, j) = Scalar(f, static_cast<long long>(code % q));
  return m;
}

// All 2 x m matrices of rank 2 in reduced row echelon form.
std::vector<Matrix> rref_2xm(Field f, std::size_t m, std::uint64_t q) {
  std::vector<Matrix> out;
  for (std::size_t p0 = 0; p0 < m; ++p0)
    for (std::size_t p1 = p0 + 1; p1 < m; ++p1) {
      std::vector<std::pair<std::size_t, std::size_t>> free;
      for (std::size_t c = p0 + 1; c < m; ++c)
        if (c != p1) free.emplace_back(0, c);
      for (std::size_t c = p1 + 1; c < m; ++c) free.emplace_back(1, c);
      std::uint64_t total = 1;
      for (std::size_t k = 0; k < free.size(); ++k) total *= q;
      for (std::uint64_t code = 0; code < total; ++code) {
        Matrix r(f, 2, m);
        r(0, p0) = Scalar(f, 1);
        r(1, p1) = Scalar(f, 1);
        std::uint64_t c = code;
        for (auto [row, col] : free) {
          r(row, col) = Scalar(f, static_cast<long long>(c % q));
          c /= q;
        }
        out.push_back(std::move(r));
      }
    }
  return out;
}

using Order = std::tuple<std::size_t, std::size_t, std::size_t>;

struct Partial {
  Census census;
  std::map<CensusKey, Order> example_order;
};

void process_pair(const FramedModule& m1, const FramedModule& m2, std::size_t i, std::size_t j, std::uint64_t q,
                  Partial& part) {
  const Field f = m1.field();
  auto tp = modcore::tensor_over_S(m1, m2);
  if (tp.dim12 < 2) return;
  const Matrix& a = tp.action[0];
  auto quotients = rref_2xm(f, tp.dim12, q);
  Census& c = part.census;
  for (std::size_t k = 0; k < quotients.size(); ++k) {
    const Matrix& r = quotients[k];
    const Matrix ra = r * a;
    auto pivots = exact::rref(r).pivots;
    Matrix z(f, 2, 2);
    for (std::size_t row = 0; row < 2; ++row)
      for (std::size_t col = 0; col < 2; ++col) z(row, col) = ra(row, pivots[col]);
    if (!(z * r == ra)) continue;  // kernel not invariant
    bilin::BilinPoint b{m1, m2, 2, {z}, r * tp.q};
    ++c.points;
    const std::string where = "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
    auto found = bilin::factor_membership(m1, m2, bilin::target_module(b));
    if (!found || !(found->Pihat == b.Pihat)) {
      ++c.membership_mismatches;
      c.violations.push_back(where + ": factor_membership does not recover the point");
    }
    const bool nonsplit = module_type_2(m1).type == ModuleType2::nonsplit ||
                          module_type_2(m2).type == ModuleType2::nonsplit ||
                          module_type_2(bilin::target_module(b)).type == ModuleType2::nonsplit;
    if (nonsplit) {
      ++c.nonsplit;
      continue;
    }
    auto pc = classify_point_222(b);
    CensusKey key{to_string(pc.label), pc.tensor.label()};
    ++c.by_label[key.label];
    ++c.by_class[key];
    if (pc.tensor.border_rank > 2) ++c.border_rank3;
    for (const auto& v : pc.violations) c.violations.push_back(where + ": " + v);
    Order order{i, j, k};
    auto it = part.example_order.find(key);
    if (it == part.example_order.end() || order < it->second) {
      part.example_order[key] = order;
      c.examples.insert_or_assign(key, b);
    }
  }
}

void merge(Partial& into, Partial&& from) {
  Census& a = into.census;
  Census& b = from.census;
  a.points += b.points;
  a.nonsplit += b.nonsplit;
  a.border_rank3 += b.border_rank3;
  a.membership_mismatches += b.membership_mismatches;
  for (const auto& [k, v] : b.by_label) a.by_label[k] += v;
  for (const auto& [k, v] : b.by_class) a.by_class[k] += v;
  for (auto& v : b.violations) a.violations.push_back(std::move(v));
  for (auto& [key, order] : from.example_order) {
    auto it = into.example_order.find(key);
    if (it == into.example_order.end() || order < it->second) {
      into.example_order[key] = order;
      a.examples.insert_or_assign(key, b.examples.at(key));
    }
  }
}

}  // namespace

std::vector<FramedModule> quot_classes_222(std::uint64_t q) {
  const Field f = Field::prime(q);
  const std::uint64_t q4 = q * q * q * q;
  std::vector<FramedModule> out;
  std::set<std::string> seen;
  for (std::uint64_t xc = 0; xc < q4; ++xc) {
    Matrix x = matrix_from_code(f, 2, 2, xc, q);
    for (std::uint64_t gc = 0; gc < q4; ++gc) {
      FramedModule m{1, 2, 2, {x}, matrix_from_code(f, 2, 2, gc, q)};
      if (!modcore::validate_framed(m).valid()) continue;
      FramedModule c = modcore::canonical_form(m);
      if (seen.insert(c.X[0].to_string() + "|" + c.G.to_string()).second) out.push_back(std::move(c));
    }
  }
  return out;
}

Census enumerate_222(std::uint64_t q, std::size_t workers, std::uint64_t cap) {
  std::uint64_t work = 1;
  for (int k = 0; k < 8; ++k) {
    if (work > cap / q) throw CapExceeded("enumerate_222: q^8 exceeds the enumeration cap");
    work *= q;
  }
  const auto classes = quot_classes_222(q);
  workers = std::max<std::size_t>(1, std::min(workers, classes.size()));
  std::vector<Partial> parts(workers);
  std::vector<std::exception_ptr> errors(workers);
  auto run = [&](std::size_t w) {
    try {
      for (std::size_t i = w; i < classes.size(); i += workers)
        for (std::size_t j = 0; j < classes.size(); ++j) process_pair(classes[i], classes[j], i, j, q, parts[w]);
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(run, w);
  run(0);
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  Partial total;
  for (auto& p : parts) merge(total, std::move(p));
  Census out = std::move(total.census);
  out.q = q;
  out.quot_classes = classes.size();
  for (auto l : all_case_labels()) out.by_label.try_emplace(to_string(l), 0);
  std::sort(out.violations.begin(), out.violations.end());
  return out;
}

}  // namespace modspace::cases
