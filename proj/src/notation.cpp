#include "knotcalc/notation.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "knotcalc/word.hpp"

namespace knotcalc {

void GroupPresentation::validate() const {
  if (generator_count < 0) throw std::invalid_argument("negative generator count");
  if (!generator_names.empty() &&
      static_cast<int>(generator_names.size()) != generator_count)
    throw std::invalid_argument("generator name count mismatch");
  for (const Word& r : relators)
    if (r.max_generator() > generator_count)
      throw std::invalid_argument("relator mentions unknown generator");
}

std::string GroupPresentation::generator_name(int index) const {
  if (index < 1 || index > generator_count) throw std::out_of_range("generator index");
  if (!generator_names.empty()) return generator_names[static_cast<std::size_t>(index - 1)];
  return "x" + std::to_string(index);
}

KnotDiagram KnotDiagram::from_tuples(std::vector<Tuple> tuples, std::string name) {
  KnotDiagram d;
  d.name_ = std::move(name);
  if (tuples.empty()) {
    d.arc_count_ = 1;  // one closed edge, no crossings
    return d;
  }
  // Renormalize labels to 1..2n by rank order.
  std::map<int, int> occurrences;
  for (const auto& t : tuples)
    for (int label : t) {
      if (label < 1) throw std::invalid_argument("edge labels must be positive");
      ++occurrences[label];
    }
  int n = static_cast<int>(tuples.size());
  if (static_cast<int>(occurrences.size()) != 2 * n)
    throw std::invalid_argument("expected " + std::to_string(2 * n) +
                                " distinct edge labels, found " +
                                std::to_string(occurrences.size()));
  std::map<int, int> relabel;
  int next = 1;
  for (const auto& [label, count] : occurrences) {
    if (count != 2)
      throw std::invalid_argument("edge label " + std::to_string(label) +
                                  " appears " + std::to_string(count) +
                                  " times, expected 2");
    relabel[label] = next++;
  }
  for (auto& t : tuples)
    for (int& label : t) label = relabel[label];

  // Slot table: for each edge, its two (crossing, position) slots.
  std::vector<std::vector<Slot>> slots(static_cast<std::size_t>(2 * n + 1));
  for (int x = 0; x < n; ++x)
    for (int k = 0; k < 4; ++k)
      slots[static_cast<std::size_t>(tuples[static_cast<std::size_t>(x)][static_cast<std::size_t>(k)])].push_back(
          {x, k});

  // Trace the knot. The edge at position 0 of crossing 0 enters there by the
  // PD convention; a strand entering at position k leaves at k+2.
  d.heads_.assign(static_cast<std::size_t>(2 * n + 1), Slot{-1, -1});
  d.tails_.assign(static_cast<std::size_t>(2 * n + 1), Slot{-1, -1});
  int edge = tuples[0][0];
  Slot head{0, 0};
  int steps = 0;
  do {
    if (d.heads_[static_cast<std::size_t>(edge)].crossing != -1)
      throw std::invalid_argument("diagram has more than one component");
    d.heads_[static_cast<std::size_t>(edge)] = head;
    if (head.position == 2)
      throw std::invalid_argument(
          "under-strand convention violated: edge enters a crossing at position 2");
    int out_pos = (head.position + 2) % 4;
    int out_edge = tuples[static_cast<std::size_t>(head.crossing)][static_cast<std::size_t>(out_pos)];
    d.tails_[static_cast<std::size_t>(out_edge)] = {head.crossing, out_pos};
    // The next head is the other slot of out_edge.
    const auto& ss = slots[static_cast<std::size_t>(out_edge)];
    Slot other;
    if (ss[0].crossing == head.crossing && ss[0].position == out_pos)
      other = ss[1];
    else if (ss[1].crossing == head.crossing && ss[1].position == out_pos)
      other = ss[0];
    else
      throw std::logic_error("slot table inconsistency");
    edge = out_edge;
    head = other;
    ++steps;
  } while (!(head.crossing == 0 && head.position == 0) && steps <= 2 * n);
  if (steps != 2 * n)
    throw std::invalid_argument("diagram has more than one component");

  // Crossing signs: over-strand enters at position 3 for +1, at 1 for -1.
  d.signs_.resize(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    int e1 = tuples[static_cast<std::size_t>(x)][1];
    int e3 = tuples[static_cast<std::size_t>(x)][3];
    const Slot h1 = d.heads_[static_cast<std::size_t>(e1)];
    const Slot h3 = d.heads_[static_cast<std::size_t>(e3)];
    bool enters_at_1 = h1.crossing == x && h1.position == 1;
    bool enters_at_3 = h3.crossing == x && h3.position == 3;
    if (enters_at_1 == enters_at_3)
      throw std::invalid_argument("over-strand orientation inconsistent at crossing " +
                                  std::to_string(x));
    d.signs_[static_cast<std::size_t>(x)] = enters_at_3 ? +1 : -1;
  }

  d.crossings_ = std::move(tuples);
  d.arc_count_ = 2 * n;
  return d;
}

KnotDiagram parse_pd(const std::string& text, std::string name) {
  std::vector<KnotDiagram::Tuple> tuples;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos >= text.size()) throw std::invalid_argument("empty PD code");
  while (pos < text.size()) {
    skip_ws();
    if (pos >= text.size()) break;
    if (text[pos] != 'X' && text[pos] != 'x')
      throw std::invalid_argument("expected 'X' at position " + std::to_string(pos));
    ++pos;
    skip_ws();
    if (pos >= text.size() || text[pos] != '(')
      throw std::invalid_argument("expected '(' after X");
    ++pos;
    KnotDiagram::Tuple t{};
    for (int i = 0; i < 4; ++i) {
      skip_ws();
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (start == pos) throw std::invalid_argument("expected integer in X(...)");
      t[static_cast<std::size_t>(i)] = std::stoi(text.substr(start, pos - start));
      skip_ws();
      if (i < 3) {
        if (pos >= text.size() || text[pos] != ',')
          throw std::invalid_argument("expected ',' in X(...)");
        ++pos;
      }
    }
    if (pos >= text.size() || text[pos] != ')')
      throw std::invalid_argument("expected ')' closing X(...)");
    ++pos;
    tuples.push_back(t);
  }
  return KnotDiagram::from_tuples(std::move(tuples), std::move(name));
}

BraidWord parse_braid_text(const std::string& text) {
  // braid(n; i1 i2 ...) with optional commas between letters.
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto expect = [&](const std::string& tok) {
    skip_ws();
    if (text.compare(pos, tok.size(), tok) != 0)
      throw std::invalid_argument("braid syntax: expected '" + tok + "'");
    pos += tok.size();
  };
  auto parse_int = [&]() -> int {
    skip_ws();
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw std::invalid_argument("braid syntax: expected integer");
    return std::stoi(text.substr(start, pos - start));
  };
  expect("braid");
  expect("(");
  BraidWord b;
  b.strand_count = parse_int();
  expect(";");
  while (true) {
    skip_ws();
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    if (pos >= text.size() || text[pos] == ')') break;
    b.letters.push_back(parse_int());
  }
  expect(")");
  skip_ws();
  if (pos != text.size()) throw std::invalid_argument("braid syntax: trailing input");
  if (b.strand_count < 1) throw std::invalid_argument("braid must have at least one strand");
  for (int letter : b.letters)
    if (letter == 0 || std::abs(letter) > b.strand_count - 1)
      throw std::invalid_argument("braid letter " + std::to_string(letter) +
                                  " out of range for " + std::to_string(b.strand_count) +
                                  " strands");
  return b;
}

KnotDiagram braid_closure(const BraidWord& braid, std::string name) {
  // The closure is a knot iff the induced permutation is a single cycle.
  int n = braid.strand_count;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  for (int letter : braid.letters) {
    int i = std::abs(letter) - 1;
    std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(i + 1)]);
  }
  {
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    int cycles = 0;
    for (int s = 0; s < n; ++s) {
      if (seen[static_cast<std::size_t>(s)]) continue;
      ++cycles;
      int cur = s;
      while (!seen[static_cast<std::size_t>(cur)]) {
        seen[static_cast<std::size_t>(cur)] = true;
        cur = perm[static_cast<std::size_t>(cur)];
      }
    }
    if (cycles != 1)
      throw std::invalid_argument("braid closure has " + std::to_string(cycles) +
                                  " components, expected a knot");
  }
  if (braid.letters.empty())
    return KnotDiagram::from_tuples({}, std::move(name));  // 1-strand unknot

  // Strands run downward. At a positive letter the incoming right strand
  // passes over; counterclockwise from the incoming under-strand this reads
  // X(l, l', r', r). A negative letter reads X(r, l, l', r').
  std::vector<int> current(static_cast<std::size_t>(n));
  std::iota(current.begin(), current.end(), 1);
  int next_label = n + 1;
  std::vector<KnotDiagram::Tuple> tuples;
  for (int letter : braid.letters) {
    int i = std::abs(letter) - 1;
    int l = current[static_cast<std::size_t>(i)];
    int r = current[static_cast<std::size_t>(i + 1)];
    int l_out = next_label++;
    int r_out = next_label++;
    if (letter > 0)
      tuples.push_back({l, l_out, r_out, r});
    else
      tuples.push_back({r, l, l_out, r_out});
    current[static_cast<std::size_t>(i)] = l_out;
    current[static_cast<std::size_t>(i + 1)] = r_out;
  }
  // Close up: bottom edge of strand j is the same edge as top label j+1.
  // Merge by renaming through a union-find over labels.
  std::vector<int> parent(static_cast<std::size_t>(next_label));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[static_cast<std::size_t>(a)] != a) {
      parent[static_cast<std::size_t>(a)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
      a = parent[static_cast<std::size_t>(a)];
    }
    return a;
  };
  for (int j = 0; j < n; ++j) {
    int a = find(current[static_cast<std::size_t>(j)]);
    int b = find(j + 1);
    if (a != b) parent[static_cast<std::size_t>(a)] = b;
  }
  for (auto& t : tuples)
    for (int& label : t) label = find(label);
  return KnotDiagram::from_tuples(std::move(tuples), std::move(name));
}

KnotDiagram parse_braid(const std::string& text, std::string name) {
  return braid_closure(parse_braid_text(text), std::move(name));
}

GroupPresentation wirtinger_presentation(const KnotDiagram& d) {
  GroupPresentation p;
  int n = d.crossing_count();
  if (n == 0) {
    p.generator_count = 1;
    return p;
  }
  // Over-arcs: classes of edges merged across the over-strand of each
  // crossing (positions 1 and 3).
  int edges = 2 * n;
  std::vector<int> parent(static_cast<std::size_t>(edges + 1));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[static_cast<std::size_t>(a)] != a) {
      parent[static_cast<std::size_t>(a)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
      a = parent[static_cast<std::size_t>(a)];
    }
    return a;
  };
  for (const auto& t : d.crossings()) {
    int a = find(t[1]), b = find(t[3]);
    if (a != b) parent[static_cast<std::size_t>(a)] = b;
  }
  std::map<int, int> arc_index;  // class representative -> generator index
  for (int e = 1; e <= edges; ++e) {
    int root = find(e);
    if (!arc_index.count(root)) {
      int idx = static_cast<int>(arc_index.size()) + 1;
      arc_index[root] = idx;
    }
  }
  auto arc = [&](int edge) { return arc_index.at(find(edge)); };

  p.generator_count = static_cast<int>(arc_index.size());
  if (p.generator_count != n)
    throw std::logic_error("expected one over-arc per crossing");
  for (int x = 0; x < n; ++x) {
    const auto& t = d.crossings()[static_cast<std::size_t>(x)];
    int o = arc(t[1]);
    int a = arc(t[0]);
    int c = arc(t[2]);
    int s = d.crossing_signs()[static_cast<std::size_t>(x)];
    Word rel = word_product(
        word_product(Word::generator(o, s), Word::generator(a)),
        word_product(Word::generator(o, -s), Word::generator(c, -1)));
    p.relators.push_back(rel);
  }
  p.validate();
  return p;
}

}  // namespace knotcalc
