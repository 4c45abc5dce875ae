#include "metacov/knot_io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <regex>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace metacov {

namespace {

using json = nlohmann::json;

struct ArcStructure {
  std::size_t n = 0;
  std::vector<std::size_t> arc_of_edge;   // indexed by label 1..2n
  std::vector<std::size_t> crossing_of;   // relator i -> crossing index
  std::vector<std::size_t> over;          // relator i -> j(i)
  std::vector<int> sign;                  // relator i -> crossing sign
};

ArcStructure arcs(const KnotDiagram& d) {
  ArcStructure a;
  a.n = d.crossing_count();
  const std::size_t edges = 2 * a.n;
  std::vector<int> under_in_crossing(edges + 1, -1);
  for (std::size_t k = 0; k < a.n; ++k) under_in_crossing[static_cast<std::size_t>(d.crossings[k][0])] = static_cast<int>(k);
  a.arc_of_edge.assign(edges + 1, 0);
  std::size_t current = 0;
  std::vector<std::size_t> end_crossing(a.n);
  auto visit = [&](std::size_t e) {
    a.arc_of_edge[e] = current;
    if (under_in_crossing[e] >= 0) {
      end_crossing[current] = static_cast<std::size_t>(under_in_crossing[e]);
      ++current;
    }
  };
  for (std::size_t e = 2; e <= edges; ++e) visit(e);
  visit(1);
  if (current != a.n) throw std::logic_error("arc count does not match crossing count");
  for (std::size_t i = 0; i < a.n; ++i) {
    const auto& x = d.crossings[end_crossing[i]];
    const std::size_t jb = a.arc_of_edge[static_cast<std::size_t>(x[1])];
    const std::size_t jd = a.arc_of_edge[static_cast<std::size_t>(x[3])];
    if (jb != jd) throw std::logic_error("over-strand edges lie on different arcs");
    a.crossing_of.push_back(end_crossing[i]);
    a.over.push_back(jb);
    a.sign.push_back(d.signs[end_crossing[i]]);
  }
  return a;
}

std::vector<std::array<long, 4>> parse_tuples(std::string_view text) {
  std::string s(text);
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw std::invalid_argument("empty diagram");
  std::vector<std::array<long, 4>> out;
  if (s[first] == '[') {
    json j;
    try {
      j = json::parse(s);
    } catch (const json::exception& e) {
      throw std::invalid_argument(std::string("malformed PD JSON: ") + e.what());
    }
    if (!j.is_array()) throw std::invalid_argument("PD JSON must be a list of 4-tuples");
    for (const auto& t : j) {
      if (!t.is_array() || t.size() != 4) throw std::invalid_argument("PD crossing must have exactly 4 labels");
      std::array<long, 4> x{};
      for (std::size_t i = 0; i < 4; ++i) {
        if (!t[i].is_number_integer()) throw std::invalid_argument("PD labels must be integers");
        x[i] = t[i].get<long>();
      }
      out.push_back(x);
    }
    return out;
  }
  static const std::regex outer(R"(^\s*PD\s*\[(.*)\]\s*$)");
  std::smatch m;
  if (!std::regex_match(s, m, outer)) throw std::invalid_argument("malformed PD code: expected PD[...]");
  const std::string body = m[1].str();
  static const std::regex cross(R"(X\s*[\(\[]\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*[\)\]])");
  std::size_t consumed = 0;
  for (auto it = std::sregex_iterator(body.begin(), body.end(), cross); it != std::sregex_iterator(); ++it) {
    const std::string gap = body.substr(consumed, static_cast<std::size_t>(it->position()) - consumed);
    if (gap.find_first_not_of(" ,\t\r\n") != std::string::npos) throw std::invalid_argument("malformed PD code near '" + gap + "'");
    out.push_back({std::stol((*it)[1]), std::stol((*it)[2]), std::stol((*it)[3]), std::stol((*it)[4])});
    consumed = static_cast<std::size_t>(it->position() + it->length());
  }
  if (body.substr(consumed).find_first_not_of(" ,\t\r\n") != std::string::npos)
    throw std::invalid_argument("malformed PD code: trailing text");
  return out;
}

std::pair<int, int> parse_rolfsen(const std::string& name) {
  auto us = name.find('_');
  if (us == std::string::npos) return {name == "unknot" ? 0 : 1000, 0};
  try {
    return {std::stoi(name.substr(0, us)), std::stoi(name.substr(us + 1))};
  } catch (const std::exception&) {
    return {1000, 0};
  }
}

Word substitute(const Word& w, std::size_t g, const Word& replacement) {
  Word out;
  const Word inv = inverse(replacement);
  for (Letter l : w) {
    if (generator_of(l) != g) {
      out.push_back(l);
      continue;
    }
    const Word& r = l > 0 ? replacement : inv;
    out.insert(out.end(), r.begin(), r.end());
  }
  Word reduced = free_reduce(out);
  for (Letter& l : reduced) {
    std::size_t h = generator_of(l);
    if (h > g) l = make_letter(h - 1, l < 0);
  }
  return reduced;
}

bool is_wirtinger_relator(const Word& r) {
  return r.size() == 4 && r[0] > 0 && r[1] > 0 && r[2] < 0 && r[3] < 0 && r[1] == -r[3];
}

}  // namespace

int KnotDiagram::writhe() const {
  int w = 0;
  for (int s : signs) w += s;
  return w;
}

KnotDiagram diagram_from_crossings(const std::vector<std::array<long, 4>>& raw, std::string name) {
  if (raw.empty()) throw std::invalid_argument("empty diagram");
  const std::size_t n = raw.size();
  std::map<long, std::vector<std::pair<std::size_t, int>>> where;
  for (std::size_t k = 0; k < n; ++k)
    for (int pos = 0; pos < 4; ++pos) where[raw[k][pos]].push_back({k, pos});
  for (auto& [label, occ] : where)
    if (occ.size() != 2)
      throw std::invalid_argument("arc label " + std::to_string(label) + " occurs " + std::to_string(occ.size()) +
                                  " times (expected exactly 2)");
  if (where.size() != 2 * n) throw std::invalid_argument("number of arcs must be twice the number of crossings");

  std::map<long, int> relabel;
  std::vector<int> signs(n, 0);
  std::vector<int> under_seen(n, 0), over_seen(n, 0);
  std::size_t k = 0;
  int pos = 0;
  relabel[raw[0][0]] = 1;
  int next = 2;
  while (true) {
    if (pos == 0 || pos == 2) {
      if (pos == 2) throw std::invalid_argument("inconsistent PD orientation at crossing " + std::to_string(k + 1));
      ++under_seen[k];
    } else {
      ++over_seen[k];
      signs[k] = (pos == 3) ? 1 : -1;
    }
    const int out_pos = (pos + 2) % 4;
    const long label = raw[k][out_pos];
    const auto& occ = where[label];
    const auto other = (occ[0].first == k && occ[0].second == out_pos) ? occ[1] : occ[0];
    k = other.first;
    pos = other.second;
    if (k == 0 && pos == 0) break;
    if (relabel.count(label)) throw std::invalid_argument("not a knot: traversal revisits an edge");
    relabel[label] = next++;
  }
  if (relabel.size() != 2 * n) throw std::invalid_argument("not a knot: diagram has more than one component");
  for (std::size_t c = 0; c < n; ++c)
    if (under_seen[c] != 1 || over_seen[c] != 1)
      throw std::invalid_argument("inconsistent PD orientation at crossing " + std::to_string(c + 1));

  KnotDiagram d;
  d.name = std::move(name);
  d.signs = signs;
  for (const auto& x : raw) d.crossings.push_back({relabel[x[0]], relabel[x[1]], relabel[x[2]], relabel[x[3]]});
  return d;
}

KnotDiagram parse_pd(std::string_view text) { return diagram_from_crossings(parse_tuples(text)); }

KnotTable KnotTable::load(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open knot table " + file.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw std::runtime_error("malformed knot table " + file.string() + ": " + e.what());
  }
  if (!j.is_object()) throw std::runtime_error("knot table must map names to diagrams");
  KnotTable t;
  for (auto& [name, entry] : j.items()) {
    KnotRecord rec;
    rec.name = name;
    const json& pd = entry.is_object() ? entry.at("pd") : entry;
    rec.diagram = parse_pd(pd.dump());
    rec.diagram.name = name;
    if (entry.is_object()) {
      if (entry.contains("fibered")) rec.fibered = entry["fibered"].get<bool>();
      if (entry.contains("genus")) rec.genus = entry["genus"].get<int>();
      if (entry.contains("families"))
        for (const auto& f : entry["families"]) rec.families.push_back({f.at("kind").get<std::string>(), f.at("params").get<std::vector<long>>()});
    }
    t.records_.emplace(name, std::move(rec));
  }
  return t;
}

std::filesystem::path data_directory() {
  if (const char* env = std::getenv("METACOV_DATA_DIR")) return env;
  std::filesystem::path src = METACOV_SOURCE_DATA_DIR;
  if (std::filesystem::exists(src / "knots.json")) return src;
  return METACOV_INSTALL_DATA_DIR;
}

const KnotTable& KnotTable::shipped() {
  static const KnotTable table = [] {
    if (const char* env = std::getenv("METACOV_KNOT_TABLE")) return load(env);
    return load(data_directory() / "knots.json");
  }();
  return table;
}

const KnotRecord& KnotTable::get(const std::string& name) const {
  auto it = records_.find(name);
  if (it == records_.end()) throw std::out_of_range("unknown knot '" + name + "'");
  return it->second;
}

std::vector<std::string> KnotTable::names() const {
  std::vector<std::string> out;
  for (auto& [name, rec] : records_) out.push_back(name);
  std::sort(out.begin(), out.end(), [](const std::string& a, const std::string& b) { return parse_rolfsen(a) < parse_rolfsen(b); });
  return out;
}

KnotDiagram builtin_knot(const std::string& name) { return KnotTable::shipped().get(name).diagram; }

std::vector<std::size_t> over_arcs(const KnotDiagram& diagram) { return arcs(diagram).over; }

GroupPresentation wirtinger(const KnotDiagram& diagram) {
  const ArcStructure a = arcs(diagram);
  GroupPresentation p;
  p.num_generators = a.n;
  p.meridian_index = 0;
  for (std::size_t i = 0; i < a.n; ++i) {
    const Letter xi = make_letter(i), xn = make_letter((i + 1) % a.n), xj = make_letter(a.over[i]);
    if (a.sign[i] > 0)
      p.relators.push_back({xi, xj, -xn, -xj});
    else
      p.relators.push_back({xn, xj, -xi, -xj});
    p.crossing_signs.push_back(a.sign[i]);
  }
  p.longitude = longitude_word(diagram);
  return p;
}

Word longitude_word(const KnotDiagram& diagram) {
  const ArcStructure a = arcs(diagram);
  Word w;
  for (std::size_t i = 0; i < a.n; ++i) w.push_back(make_letter(a.over[i], a.sign[i] < 0));
  const int writhe = diagram.writhe();
  for (int k = 0; k < std::abs(writhe); ++k) w.push_back(make_letter(0, writhe > 0));
  return free_reduce(w);
}

GroupPresentation simplify(const GroupPresentation& pres) {
  pres.validate();
  const std::size_t r = pres.num_generators;
  if (r == pres.relators.size() + 1) return pres;
  if (r != pres.relators.size() || r == 0) throw std::invalid_argument("simplify: presentation is not of Wirtinger form");
  for (const auto& w : pres.relators)
    if (!is_wirtinger_relator(w)) throw std::invalid_argument("simplify: presentation is not of Wirtinger form");

  const AbelianGroup before = abelianization(pres);
  GroupPresentation out = pres;
  std::size_t used = pres.relators.size();
  std::size_t eliminated = r;
  Word replacement;
  for (std::size_t g = r; g-- > 0 && used == pres.relators.size();) {
    if (g == pres.meridian_index) continue;
    for (std::size_t i = 0; i < pres.relators.size(); ++i) {
      const auto& w = pres.relators[i];
      const std::size_t a = generator_of(w[0]), b = generator_of(w[1]), c = generator_of(w[2]);
      if (a == c) continue;
      if (c == g) {
        replacement = (b == a || b == c) ? Word{w[0]} : Word{-w[1], w[0], w[1]};
      } else if (a == g) {
        replacement = (b == a || b == c) ? Word{-w[2]} : Word{w[1], -w[2], -w[1]};
      } else {
        continue;
      }
      used = i;
      eliminated = g;
      break;
    }
  }

  std::vector<Word> rels;
  std::vector<int> signs;
  for (std::size_t i = 0; i < pres.relators.size(); ++i) {
    if (i == used) continue;
    rels.push_back(pres.relators[i]);
    if (i < pres.crossing_signs.size()) signs.push_back(pres.crossing_signs[i]);
  }
  rels.pop_back();
  if (!signs.empty() && signs.size() > rels.size()) signs.pop_back();

  if (eliminated < r) {
    for (auto& w : rels) w = substitute(w, eliminated, replacement);
    if (out.longitude) out.longitude = substitute(*out.longitude, eliminated, replacement);
    out.num_generators = r - 1;
    if (out.meridian_index > eliminated) --out.meridian_index;
  }
  out.relators = std::move(rels);
  out.crossing_signs = std::move(signs);
  if (abelianization(out) != before) throw std::logic_error("simplify changed the abelianization");
  return out;
}

}  // namespace metacov
