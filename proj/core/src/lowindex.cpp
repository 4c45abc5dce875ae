#include "metacov/lowindex.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace metacov {

namespace {

// Partial coset table for the Sims search. Column 2g is x_g, 2g+1 its inverse.
struct Partial {
  std::size_t cols = 0;
  std::size_t used = 1;
  std::vector<std::int32_t> cell;

  std::int32_t& at(std::size_t c, std::size_t col) { return cell[c * cols + col]; }
  std::int32_t at(std::size_t c, std::size_t col) const { return cell[c * cols + col]; }
};

std::size_t column(Letter l) { return 2 * generator_of(l) + (l < 0 ? 1 : 0); }

class SimsSearch {
 public:
  SimsSearch(const GroupPresentation& pres, std::size_t max_index,
             std::function<bool(const Partial&)> on_complete)
      : max_(max_index), cols_(2 * pres.num_generators), on_complete_(std::move(on_complete)) {
    for (const Word& w : pres.relators) {
      std::vector<std::size_t> fwd, bwd;
      for (Letter l : w) fwd.push_back(column(l));
      for (auto it = w.rbegin(); it != w.rend(); ++it) bwd.push_back(column(-*it));
      rel_fwd_.push_back(std::move(fwd));
      rel_bwd_.push_back(std::move(bwd));
    }
  }

  void run() {
    Partial start;
    start.cols = cols_;
    start.cell.assign(max_ * cols_, -1);
    if (cols_ == 0) {
      on_complete_(start);
      return;
    }
    if (deduce(start)) descend(start);
  }

 private:
  static bool assign(Partial& t, std::size_t c, std::size_t col, std::size_t d) {
    if (t.at(d, col ^ 1) != -1) return false;
    t.at(c, col) = static_cast<std::int32_t>(d);
    t.at(d, col ^ 1) = static_cast<std::int32_t>(c);
    return true;
  }

  // Scans every relator from every coset until no single gaps remain.
  bool deduce(Partial& t) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t c = 0; c < t.used; ++c) {
        for (std::size_t k = 0; k < rel_fwd_.size(); ++k) {
          const auto& fwd = rel_fwd_[k];
          const auto& bwd = rel_bwd_[k];
          const std::size_t len = fwd.size();
          std::size_t i = 0, f = c;
          while (i < len && t.at(f, fwd[i]) != -1) f = static_cast<std::size_t>(t.at(f, fwd[i++]));
          if (i == len) {
            if (f != c) return false;
            continue;
          }
          std::size_t j = len, b = c;
          while (j > i && t.at(b, bwd[len - j]) != -1) b = static_cast<std::size_t>(t.at(b, bwd[len - j--]));
          if (j == i) {
            if (f != b) return false;
          } else if (j == i + 1) {
            if (!assign(t, f, fwd[i], b)) return false;
            changed = true;
          }
        }
      }
    }
    return true;
  }

  // Relabels the table with each coset as basepoint; false if some relabeling
  // is lexicographically smaller on the part where both are defined.
  bool canonical(const Partial& t) const {
    std::vector<std::int32_t> to_new(t.used), to_old(t.used);
    for (std::size_t base = 1; base < t.used; ++base) {
      std::fill(to_new.begin(), to_new.end(), -1);
      to_new[base] = 0;
      to_old[0] = static_cast<std::int32_t>(base);
      std::size_t next = 1;
      bool decided = false;
      for (std::size_t nc = 0; nc < next && !decided; ++nc) {
        const auto old = static_cast<std::size_t>(to_old[nc]);
        for (std::size_t col = 0; col < cols_; ++col) {
          const std::int32_t img = t.at(old, col);
          const std::int32_t cur = t.at(nc, col);
          if (img == -1 || cur == -1) {
            decided = true;
            break;
          }
          if (to_new[img] == -1) {
            to_new[img] = static_cast<std::int32_t>(next);
            to_old[next++] = img;
          }
          if (to_new[img] < cur) return false;
          if (to_new[img] > cur) {
            decided = true;
            break;
          }
        }
      }
    }
    return true;
  }

  bool descend(const Partial& t) {
    if (stopped_) return false;
    std::size_t c = 0, col = 0;
    bool found = false;
    for (c = 0; c < t.used && !found; ++c)
      for (col = 0; col < cols_; ++col)
        if (t.at(c, col) == -1) {
          found = true;
          break;
        }
    if (!found) {
      if (!on_complete_(t)) stopped_ = true;
      return !stopped_;
    }
    --c;
    const std::size_t limit = std::min(t.used + 1, max_);
    for (std::size_t d = 0; d < limit && !stopped_; ++d) {
      Partial next = t;
      if (d == t.used) ++next.used;
      if (!assign(next, c, col, d)) continue;
      if (!deduce(next) || !canonical(next)) continue;
      descend(next);
    }
    return !stopped_;
  }

  std::size_t max_;
  std::size_t cols_;
  std::function<bool(const Partial&)> on_complete_;
  std::vector<std::vector<std::size_t>> rel_fwd_, rel_bwd_;
  bool stopped_ = false;
};

CosetTable to_table(const Partial& t, std::size_t generators) {
  std::vector<std::vector<std::uint32_t>> forward(generators, std::vector<std::uint32_t>(t.used));
  for (std::size_t g = 0; g < generators; ++g)
    for (std::size_t c = 0; c < t.used; ++c) forward[g][c] = static_cast<std::uint32_t>(t.at(c, 2 * g));
  return CosetTable(std::move(forward));
}

// Table relabelled in breadth-first order from the given basepoint.
std::vector<std::uint32_t> standardized(const CosetTable& tab, std::uint32_t base) {
  const std::size_t N = tab.degree(), r = tab.num_generators();
  std::vector<std::int64_t> to_new(N, -1);
  std::vector<std::uint32_t> to_old{base};
  to_new[base] = 0;
  std::vector<std::uint32_t> out;
  for (std::size_t nc = 0; nc < to_old.size(); ++nc)
    for (std::size_t g = 0; g < r; ++g)
      for (bool inv : {false, true}) {
        const std::uint32_t img = tab.act(to_old[nc], make_letter(g, inv));
        if (to_new[img] == -1) {
          to_new[img] = static_cast<std::int64_t>(to_old.size());
          to_old.push_back(img);
        }
        out.push_back(static_cast<std::uint32_t>(to_new[img]));
      }
  return out;
}

}  // namespace

bool is_cyclic_cover(const CosetTable& table) {
  const std::size_t r = table.num_generators(), N = table.degree();
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = a + 1; b < r; ++b)
      for (std::size_t c = 0; c < N; ++c) {
        const auto& pa = table.permutation(a);
        const auto& pb = table.permutation(b);
        if (pa[pb[c]] != pb[pa[c]]) return false;
      }
  return true;
}

std::size_t conjugacy_class_size(const CosetTable& table) {
  std::set<std::vector<std::uint32_t>> distinct;
  for (std::uint32_t b = 0; b < table.degree(); ++b) distinct.insert(standardized(table, b));
  return distinct.size();
}

void for_each_subgroup_of_index(const GroupPresentation& pres, std::size_t index,
                                const std::function<bool(const SubgroupRecord&)>& visit) {
  if (index == 0) throw std::invalid_argument("index must be positive");
  std::size_t counter = 0;
  SimsSearch search(pres, index, [&](const Partial& t) {
    if (t.used != index) return true;
    SubgroupRecord rec;
    rec.index = index;
    rec.table = to_table(t, pres.num_generators);
    rec.is_cyclic_cover = is_cyclic_cover(rec.table);
    rec.class_id = counter++;
    rec.class_size = conjugacy_class_size(rec.table);
    return visit(rec);
  });
  search.run();
}

std::vector<SubgroupRecord> low_index_subgroups(const GroupPresentation& pres, std::size_t max_index,
                                                const LowIndexOptions& options) {
  if (max_index > options.cap)
    throw std::invalid_argument("index " + std::to_string(max_index) + " exceeds the cap " + std::to_string(options.cap));
  std::vector<SubgroupRecord> out;
  for (std::size_t k = 1; k <= max_index; ++k)
    for_each_subgroup_of_index(pres, k, [&](const SubgroupRecord& rec) {
      out.push_back(rec);
      out.back().class_id = out.size() - 1;
      return true;
    });
  return out;
}

MinimalDegree minimal_noncyclic_degree(const GroupPresentation& pres, std::size_t cap) {
  MinimalDegree md;
  md.cap = cap;
  for (std::size_t k = 2; k <= cap && !md.degree; ++k)
    for_each_subgroup_of_index(pres, k, [&](const SubgroupRecord& rec) {
      if (rec.is_cyclic_cover) return true;
      md.degree = k;
      return false;
    });
  return md;
}

std::string minimal_line(const std::string& knot, const MinimalDegree& md, bool matches,
                         const std::vector<std::string>& factorizations) {
  std::ostringstream os;
  if (!md.degree) {
    os << knot << ", none <= " << md.cap;
    return os.str();
  }
  os << knot << ", " << *md.degree << ": " << (matches ? "Yes" : "No");
  for (const auto& f : factorizations) os << ", " << f;
  return os.str();
}

}  // namespace metacov
