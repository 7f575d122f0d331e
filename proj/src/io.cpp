#include "splits/io.hpp"

#include <algorithm>
#include <cerrno>
#include <cstdlib>
#include <random>
#include <sstream>

namespace splits {

namespace {

struct Token {
  std::string text;
  int line;
  int column;
};

std::vector<std::vector<Token>> tokenize(const std::string& text) {
  std::vector<std::vector<Token>> lines;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::vector<Token> toks;
    size_t i = 0;
    while (i < line.size()) {
      if (std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
        continue;
      }
      size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      toks.push_back({line.substr(i, j - i), lineno, static_cast<int>(i) + 1});
      i = j;
    }
    lines.push_back(std::move(toks));
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

Value parse_int(const Token& t, Value min_allowed) {
  errno = 0;
  char* end = nullptr;
  long long v = std::strtoll(t.text.c_str(), &end, 10);
  if (end != t.text.c_str() + t.text.size() || t.text.empty())
    throw ParseError(t.line, t.column, "not an integer: '" + t.text + "'");
  if (errno == ERANGE) throw ParseError(t.line, t.column, "integer overflow: '" + t.text + "'");
  if (v < min_allowed)
    throw ParseError(t.line, t.column,
                     "value " + std::to_string(v) + " below minimum " +
                         std::to_string(min_allowed));
  return v;
}

std::vector<Value> parse_row(const std::vector<std::vector<Token>>& lines, size_t row,
                             size_t count, const char* what, Value min_allowed) {
  if (count == 0 && row >= lines.size()) return {};
  if (row >= lines.size())
    throw ParseError(static_cast<int>(row) + 1, 1,
                     std::string("missing line with ") + std::to_string(count) + " " + what);
  const auto& toks = lines[row];
  if (toks.size() != count) {
    int l = static_cast<int>(row) + 1;
    int c = toks.empty() ? 1 : toks.back().column;
    throw ParseError(l, c,
                     "expected " + std::to_string(count) + " " + what + ", got " +
                         std::to_string(toks.size()));
  }
  std::vector<Value> out;
  for (const auto& t : toks) out.push_back(parse_int(t, min_allowed));
  return out;
}

}  // namespace

ParsedObject parse_instance(const std::string& text) {
  auto lines = tokenize(text);
  if (lines.empty() || lines[0].empty()) throw ParseError(1, 1, "empty input");
  const auto& header = lines[0];
  const std::string& tag = header[0].text;
  if (header.size() != 2)
    throw ParseError(header[0].line, header[0].column, "header must be '<kind> <count>'");
  Value count = parse_int(header[1], 0);

  ParsedObject obj;
  if (tag == "wsr") {
    if (count < 1) throw ParseError(header[1].line, header[1].column, "need at least 1 weight");
    obj.kind = ParsedObject::Wsr;
    obj.instance.weights = parse_row(lines, 1, count, "weights", 1);
    obj.instance.splits = parse_row(lines, 2, count - 1, "splits", 1);
  } else if (tag == "scd") {
    if (count < 1) throw ParseError(header[1].line, header[1].column, "need at least 1 job");
    obj.kind = ParsedObject::Scd;
    obj.scd.jobs = parse_row(lines, 1, count, "jobs", 1);
    obj.scd.deadlines = parse_row(lines, 2, count, "deadlines", 1);
    std::sort(obj.scd.deadlines.begin(), obj.scd.deadlines.end());
  } else if (tag == "nmts" || tag == "dnmts") {
    obj.kind = tag == "nmts" ? ParsedObject::Nmts : ParsedObject::Dnmts;
    auto a = parse_row(lines, 1, count, "A values", 1);
    auto b = parse_row(lines, 2, count, "B values", 1);
    auto s = parse_row(lines, 3, count, "S values", 1);
    try {
      obj.nmts = make_nmts(a, b, s, tag == "dnmts");
    } catch (const std::invalid_argument& e) {
      throw ParseError(header[0].line, header[0].column, e.what());
    }
  } else if (tag == "tree") {
    if (count < 1) throw ParseError(header[1].line, header[1].column, "need at least 1 vertex");
    obj.kind = ParsedObject::Tree;
    obj.tree.n = static_cast<int>(count);
    for (Value i = 0; i < count; ++i) {
      auto row = parse_row(lines, 1 + i, 2, "vertex fields (id weight)", 0);
      if (row[0] != i)
        throw ParseError(static_cast<int>(i) + 2, 1,
                         "vertex ids must be 0.." + std::to_string(count - 1) + " in order");
      if (row[1] < 1) throw ParseError(static_cast<int>(i) + 2, 1, "weight must be positive");
      obj.tree.weight.push_back(row[1]);
    }
    for (Value i = 0; i + 1 < count; ++i) {
      auto row = parse_row(lines, 1 + count + i, 3, "edge fields (u v split)", 0);
      if (row[0] < 0 || row[0] >= count || row[1] < 0 || row[1] >= count || row[0] == row[1])
        throw ParseError(static_cast<int>(count + i) + 2, 1, "bad edge endpoints");
      if (row[2] < 1)
        throw ParseError(static_cast<int>(count + i) + 2, 1, "split must be positive");
      Edge e = make_edge(static_cast<int>(row[0]), static_cast<int>(row[1]));
      obj.tree.edges.push_back(e);
      obj.tree_splits.value[e] = row[2];
    }
  } else if (tag == "sched") {
    if (count != 2)
      throw ParseError(header[1].line, header[1].column, "schedules have exactly 2 processors");
    obj.kind = ParsedObject::Sched;
    for (size_t row = 1; row <= 2; ++row) {
      auto& proc = row == 1 ? obj.schedule.p1 : obj.schedule.p2;
      if (row < lines.size())
        for (const auto& t : lines[row]) proc.push_back(parse_int(t, 1));
    }
  } else if (tag == "splits") {
    obj.kind = ParsedObject::Splits;
    obj.splits = parse_row(lines, 1, count, "splits", 1);
  } else {
    throw ParseError(header[0].line, header[0].column, "unknown kind tag '" + tag + "'");
  }

  size_t expected_rows = 0;
  switch (obj.kind) {
    case ParsedObject::Wsr: expected_rows = count > 1 ? 3 : 2; break;
    case ParsedObject::Scd: expected_rows = 3; break;
    case ParsedObject::Nmts:
    case ParsedObject::Dnmts: expected_rows = 4; break;
    case ParsedObject::Tree: expected_rows = 2 * count; break;
    case ParsedObject::Sched: expected_rows = lines.size(); break;
    case ParsedObject::Splits: expected_rows = count > 0 ? 2 : 1; break;
  }
  if (lines.size() > expected_rows) {
    const auto& extra = lines[expected_rows];
    int l = static_cast<int>(expected_rows) + 1;
    throw ParseError(extra.empty() ? l : extra[0].line, extra.empty() ? 1 : extra[0].column,
                     "unexpected trailing content");
  }
  return obj;
}

namespace {

void emit_row(std::ostringstream& os, const std::vector<Value>& row) {
  for (size_t i = 0; i < row.size(); ++i) os << (i ? " " : "") << row[i];
  os << "\n";
}

}  // namespace

std::string emit_instance(const Instance& instance) {
  std::ostringstream os;
  os << "wsr " << instance.weights.size() << "\n";
  emit_row(os, instance.weights);
  if (!instance.splits.empty()) emit_row(os, instance.splits);
  return os.str();
}

std::string emit_scd(const ScdInstance& scd) {
  std::ostringstream os;
  os << "scd " << scd.jobs.size() << "\n";
  emit_row(os, scd.jobs);
  emit_row(os, scd.deadlines);
  return os.str();
}

std::string emit_nmts(const NmtsInstance& nmts) {
  std::ostringstream os;
  os << (nmts.distinct_required ? "dnmts " : "nmts ") << nmts.m() << "\n";
  emit_row(os, nmts.a);
  emit_row(os, nmts.b);
  emit_row(os, nmts.s);
  return os.str();
}

std::string emit_tree(const WeightedTree& tree, const SplitAssignment& assignment) {
  std::ostringstream os;
  os << "tree " << tree.n << "\n";
  for (int v = 0; v < tree.n; ++v) os << v << " " << tree.weight[v] << "\n";
  for (const auto& [e, s] : assignment.value) os << e.first << " " << e.second << " " << s << "\n";
  return os.str();
}

std::string emit_schedule(const Schedule& schedule) {
  std::ostringstream os;
  os << "sched 2\n";
  emit_row(os, schedule.p1);
  emit_row(os, schedule.p2);
  return os.str();
}

std::string emit_splits(const std::vector<Value>& splits) {
  std::ostringstream os;
  os << "splits " << splits.size() << "\n";
  if (!splits.empty()) emit_row(os, splits);
  return os.str();
}

NmtsInstance gen_nmts(bool distinct, int m, Value max_value, std::uint64_t seed, bool solvable) {
  if (m < 1 || max_value < 2) throw std::invalid_argument("gen_nmts: need m >= 1, max value >= 2");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Value> draw(1, max_value);
  for (int attempt = 0; attempt < 20000; ++attempt) {
    std::vector<Value> a(m), b(m);
    for (auto& v : a) v = draw(rng);
    for (auto& v : b) v = draw(rng);
    std::vector<int> pi(m);
    for (int i = 0; i < m; ++i) pi[i] = i;
    std::shuffle(pi.begin(), pi.end(), rng);
    std::vector<Value> s(m);
    for (int i = 0; i < m; ++i) s[i] = a[i] + b[pi[i]];
    if (!solvable && m >= 2) {
      // trade between two targets: keeps the balance, usually kills matchings
      int i = static_cast<int>(rng() % m), j = (i + 1) % m;
      if (s[j] > 1) {
        Value delta = 1 + static_cast<Value>(rng() % static_cast<std::uint64_t>(s[j]));
        delta = std::min(delta, s[j] - 1);
        s[i] += delta;
        s[j] -= delta;
      }
    }
    try {
      NmtsInstance out = make_nmts(a, b, s, distinct);
      if (!solvable && find_matching(out)) continue;
      return out;
    } catch (const std::invalid_argument&) {
      continue;
    }
  }
  throw std::runtime_error("gen_nmts: could not generate an instance with these parameters");
}

namespace {

bool match_rec(const NmtsInstance& nmts, int i, std::vector<char>& ua, std::vector<char>& ub,
               std::vector<std::pair<int, int>>& out) {
  int m = nmts.m();
  if (i == m) return true;
  for (int j = 0; j < m; ++j) {
    if (ua[j]) continue;
    for (int k = 0; k < m; ++k) {
      if (ub[k] || nmts.a[j] + nmts.b[k] != nmts.s[i]) continue;
      ua[j] = ub[k] = 1;
      out[i] = {j + 1, k + 1};
      if (match_rec(nmts, i + 1, ua, ub, out)) return true;
      ua[j] = ub[k] = 0;
    }
  }
  return false;
}

}  // namespace

std::optional<std::vector<std::pair<int, int>>> find_matching(const NmtsInstance& nmts) {
  int m = nmts.m();
  std::vector<char> ua(m, 0), ub(m, 0);
  std::vector<std::pair<int, int>> out(m);
  if (!match_rec(nmts, 0, ua, ub, out)) return std::nullopt;
  return out;
}

}  // namespace splits
