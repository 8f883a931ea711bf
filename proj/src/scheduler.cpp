#include "gldpc/scheduler.hpp"

#include <algorithm>
#include <stdexcept>

#include "gldpc/analysis.hpp"
#include "gldpc/rng.hpp"

namespace gldpc {

void OverlapTable::set(int a, int b, int n_ab) {
  if (a == b) throw std::invalid_argument("overlap of a node with itself");
  table_[{std::min(a, b), std::max(a, b)}] = n_ab;
}

int OverlapTable::get(int a, int b) const {
  auto it = table_.find({std::min(a, b), std::max(a, b)});
  return it == table_.end() ? 0 : it->second;
}

NodeProfile profile_of_row(const ExponentMatrix& m, int row, const CodePtr& code) {
  NodeProfile p;
  p.id = row;
  p.degree = m.row_degree(row);
  if (!code) throw std::invalid_argument("profile_of_row: missing subcode");
  if (code->n() != p.degree)
    throw std::invalid_argument("profile_of_row: subcode length differs from row degree");
  p.n = code->n();
  p.d_min = code->d_min();
  p.a_min = (long long)code->a_min();
  p.code = code;
  return p;
}

OverlapTable overlaps_of(const ExponentMatrix& m) {
  OverlapTable t;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = i + 1; j < m.rows(); ++j)
      t.set(i, j, row_overlap(m, i, j));
  return t;
}

Rational f_metric(long long a_min, int d_min, int n, int n_ab) {
  if (n <= 0 || d_min <= 0) throw std::invalid_argument("f_metric: degenerate profile");
  if (n_ab < 0 || n_ab > n) throw std::invalid_argument("f_metric: overlap out of range");
  const long long cnd = binom(n, d_min);
  const long long diff = binom(n - 1, d_min - 1) - binom(n - n_ab - 1, d_min - 1);
  return Rational(n - n_ab) * Rational(a_min, cnd) * Rational(diff);
}

Rational f_metric(const NodeProfile& p, int n_ab) {
  return f_metric(p.a_min, p.d_min, p.n, n_ab);
}

std::vector<int> hds_schedule(const std::vector<NodeProfile>& profiles,
                              const OverlapTable& overlaps) {
  if (profiles.empty()) return {};
  std::vector<const NodeProfile*> order{&profiles[0]};
  for (std::size_t i = 1; i < profiles.size(); ++i) {
    order.push_back(&profiles[i]);
    for (std::size_t j = order.size() - 1; j >= 1; --j) {
      const NodeProfile* left = order[j - 1];
      const NodeProfile* right = order[j];
      bool swap;
      if (right->d_min > left->d_min) {
        swap = true;
      } else if (right->d_min == left->d_min) {
        const int n_ab = overlaps.get(left->id, right->id);
        swap = f_metric(*left, n_ab) > f_metric(*right, n_ab);
      } else {
        swap = false;
      }
      if (!swap) break;
      std::swap(order[j - 1], order[j]);
    }
  }
  std::vector<int> ids;
  ids.reserve(order.size());
  for (const auto* p : order) ids.push_back(p->id);
  return ids;
}

Preference pairwise_preference(const NodeProfile& a, const NodeProfile& b, int n_ab,
                               PairwiseChannel channel) {
  if (a.d_min != b.d_min)  // larger minimum distance goes first
    return a.d_min < b.d_min ? Preference::b_first : Preference::a_first;
  if (channel.kind == PairwiseChannel::bec) {
    const Rational fa = f_metric(a, n_ab);
    const Rational fb = f_metric(b, n_ab);
    if (fa > fb) return Preference::b_first;
    if (fb > fa) return Preference::a_first;
    return Preference::indifferent;
  }
  if (!a.code || !b.code)
    throw std::invalid_argument("AWGN pairwise preference needs the subcodes");
  const long long da = tail_count_difference(*a.code, n_ab);
  const long long db = tail_count_difference(*b.code, n_ab);
  if (da > db) return Preference::b_first;
  if (db > da) return Preference::a_first;
  return Preference::indifferent;
}

std::vector<int> baseline_schedule(BaselineKind kind,
                                   const std::vector<NodeProfile>& profiles,
                                   std::uint64_t seed) {
  std::vector<int> ids;
  ids.reserve(profiles.size());
  for (const auto& p : profiles) ids.push_back(p.id);
  std::sort(ids.begin(), ids.end());
  switch (kind) {
    case BaselineKind::natural:
      break;
    case BaselineKind::low_degree: {
      auto degree_of = [&](int id) {
        for (const auto& p : profiles)
          if (p.id == id) return p.degree;
        throw std::invalid_argument("baseline_schedule: unknown profile id");
      };
      std::stable_sort(ids.begin(), ids.end(),
                       [&](int x, int y) { return degree_of(x) < degree_of(y); });
      break;
    }
    case BaselineKind::random: {
      Rng rng(splitmix64(seed));
      rng.shuffle(ids);
      break;
    }
  }
  return ids;
}

}  // namespace gldpc
