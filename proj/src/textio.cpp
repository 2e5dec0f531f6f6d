#include "countforge/textio.hpp"

#include <charconv>
#include <sstream>
#include <vector>

#include "countforge/error.hpp"

namespace countforge::textio {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

std::vector<std::string_view> split(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != '\r') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

// Nonblank lines with their numbers; lines whose first token starts with
// `comment` are skipped.
std::vector<Line> lines_of(std::string_view text, char comment) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    auto tokens = split(text.substr(pos, end - pos));
    if (!tokens.empty() && tokens.front().front() != comment) out.push_back({number, std::move(tokens)});
    pos = end + 1;
  }
  return out;
}

template <class T>
T parse_number(std::string_view token, std::size_t line, const char* what) {
  T value{};
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line, std::string("malformed ") + what + " '" + std::string(token) + "'");
  }
  return value;
}

Rational parse_weight(std::string_view token, std::size_t line) {
  try {
    return parse_rational(token);
  } catch (const InvalidArgument& e) {
    throw ParseError(line, e.what());
  }
}

std::size_t last_line(std::string_view text) {
  std::size_t n = 1;
  for (char c : text) n += c == '\n';
  return n;
}

struct ArcLine {
  VertexId u, v;
  Rational w;
};

// Shared reader for `graph` and `digraph`.
std::pair<std::size_t, std::vector<ArcLine>> parse_edge_list(std::string_view text, std::string_view keyword) {
  const auto lines = lines_of(text, '#');
  if (lines.empty()) throw ParseError(last_line(text), "missing '" + std::string(keyword) + "' header");
  const Line& head = lines.front();
  if (head.tokens.size() != 3 || head.tokens[0] != keyword) {
    throw ParseError(head.number, "expected '" + std::string(keyword) + " <n> <m>'");
  }
  const auto n = parse_number<std::size_t>(head.tokens[1], head.number, "vertex count");
  const auto m = parse_number<std::size_t>(head.tokens[2], head.number, "edge count");
  if (lines.size() - 1 != m) {
    const std::size_t where = lines.size() - 1 > m ? lines[m + 1].number : last_line(text);
    throw ParseError(where, "header announces " + std::to_string(m) + " edges, found " + std::to_string(lines.size() - 1));
  }
  std::vector<ArcLine> arcs;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.tokens.size() < 2 || l.tokens.size() > 3) throw ParseError(l.number, "expected 'u v [weight]'");
    const auto u = parse_number<std::size_t>(l.tokens[0], l.number, "vertex");
    const auto v = parse_number<std::size_t>(l.tokens[1], l.number, "vertex");
    if (u >= n || v >= n) throw ParseError(l.number, "vertex index out of range");
    arcs.push_back({u, v, l.tokens.size() == 3 ? parse_weight(l.tokens[2], l.number) : Rational(1)});
  }
  return {n, std::move(arcs)};
}

}  // namespace

Cnf parse_dimacs(std::string_view text) {
  const auto lines = lines_of(text, 'c');
  if (lines.empty()) throw ParseError(last_line(text), "missing 'p cnf' header");
  const Line& head = lines.front();
  if (head.tokens.size() != 4 || head.tokens[0] != "p" || head.tokens[1] != "cnf") {
    throw ParseError(head.number, "expected 'p cnf <vars> <clauses>'");
  }
  Cnf f;
  f.num_vars = parse_number<int>(head.tokens[2], head.number, "variable count");
  const auto declared = parse_number<std::size_t>(head.tokens[3], head.number, "clause count");
  if (f.num_vars < 0) throw ParseError(head.number, "negative variable count");
  Clause current;
  std::size_t current_line = head.number;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    for (auto token : lines[i].tokens) {
      const int lit = parse_number<int>(token, lines[i].number, "literal");
      if (lit == 0) {
        f.clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      if (lit > f.num_vars || -lit > f.num_vars) throw ParseError(lines[i].number, "literal out of range");
      current.push_back(lit);
      current_line = lines[i].number;
    }
  }
  if (!current.empty()) throw ParseError(current_line, "clause not terminated by 0");
  if (f.clauses.size() != declared) {
    throw ParseError(last_line(text), "header announces " + std::to_string(declared) + " clauses, found " +
                                          std::to_string(f.clauses.size()));
  }
  return f;
}

WeightedGraph parse_graph(std::string_view text) {
  auto [n, arcs] = parse_edge_list(text, "graph");
  WeightedGraph out{Multigraph(n), {}};
  for (auto& a : arcs) {
    out.graph.add_edge(a.u, a.v);
    out.weights.push_back(std::move(a.w));
  }
  return out;
}

Digraph parse_digraph(std::string_view text) {
  auto [n, arcs] = parse_edge_list(text, "digraph");
  Digraph d(n);
  for (const auto& a : arcs) d.add_arc(a.u, a.v, a.w);
  return d;
}

RationalMatrix parse_matrix(std::string_view text) {
  const auto lines = lines_of(text, '#');
  if (lines.empty()) throw ParseError(last_line(text), "missing 'matrix' header");
  const Line& head = lines.front();
  if (head.tokens.size() != 2 || head.tokens[0] != "matrix") throw ParseError(head.number, "expected 'matrix <n>'");
  const auto n = parse_number<std::size_t>(head.tokens[1], head.number, "dimension");
  if (lines.size() - 1 != n) {
    throw ParseError(lines.size() - 1 > n ? lines[n + 1].number : last_line(text),
                     "expected " + std::to_string(n) + " rows");
  }
  RationalMatrix a(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    const Line& l = lines[r + 1];
    if (l.tokens.size() != n) throw ParseError(l.number, "expected " + std::to_string(n) + " entries");
    for (std::size_t c = 0; c < n; ++c) a(r, c) = parse_weight(l.tokens[c], l.number);
  }
  return a;
}

std::string serialize(const Cnf& f) {
  std::ostringstream out;
  out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
  for (const auto& c : f.clauses) {
    for (Literal l : c) out << l << ' ';
    out << "0\n";
  }
  return out.str();
}

std::string serialize(const Multigraph& g) { return serialize(WeightedGraph{g, uniform_weights(g, 1)}); }

std::string serialize(const WeightedGraph& g) {
  std::ostringstream out;
  out << "graph " << g.graph.vertex_count() << ' ' << g.graph.edge_count() << '\n';
  for (EdgeId e = 0; e < g.graph.edge_count(); ++e) {
    out << g.graph.edge(e).u << ' ' << g.graph.edge(e).v;
    if (e < g.weights.size() && g.weights[e] != 1) out << ' ' << to_string(g.weights[e]);
    out << '\n';
  }
  return out.str();
}

std::string serialize(const Digraph& d) {
  std::ostringstream out;
  out << "digraph " << d.vertex_count() << ' ' << d.arc_count() << '\n';
  for (const auto& a : d.arcs()) {
    out << a.from << ' ' << a.to;
    if (a.weight != 1) out << ' ' << to_string(a.weight);
    out << '\n';
  }
  return out.str();
}

std::string serialize(const RationalMatrix& a) {
  std::ostringstream out;
  out << "matrix " << a.rows() << '\n';
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out << (c ? " " : "") << to_string(a(r, c));
    out << '\n';
  }
  return out.str();
}

}  // namespace countforge::textio
