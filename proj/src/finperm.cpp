#include "rigcat/finperm.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <sstream>

namespace rigcat {

const char *errc_name(errc code) {
  switch (code) {
  case errc::domain_mismatch: return "DomainMismatch";
  case errc::malformed_cycles: return "MalformedCycles";
  case errc::parse_error: return "ParseError";
  case errc::index_out_of_range: return "IndexOutOfRange";
  case errc::invalid_projection: return "InvalidProjection";
  case errc::range_error: return "RangeError";
  case errc::zero_modulus: return "ZeroModulus";
  case errc::overflow: return "Overflow";
  case errc::non_invertible_data: return "NonInvertibleData";
  case errc::endpoint_mismatch: return "EndpointMismatch";
  case errc::target_mismatch: return "TargetMismatch";
  case errc::enumeration_unsupported: return "EnumerationUnsupported";
  }
  return "UnknownError";
}

nat checked_add(nat a, nat b) {
  if (a > std::numeric_limits<nat>::max() - b)
    fail(errc::overflow, "size addition overflows");
  return a + b;
}

nat checked_mul(nat a, nat b) {
  if (a != 0 && b > std::numeric_limits<nat>::max() / a)
    fail(errc::overflow, "size multiplication overflows");
  return a * b;
}

FinMap::FinMap(nat cod, std::vector<nat> table)
    : cod_(cod), table_(std::move(table)) {
  for (nat v : table_)
    if (v < 1 || v > cod_)
      fail(errc::range_error, "map entry " + std::to_string(v) +
                                  " outside 1.." + std::to_string(cod_));
}

bool FinMap::is_identity() const {
  if (cod_ != dom())
    return false;
  for (nat i = 0; i < table_.size(); ++i)
    if (table_[i] != i + 1)
      return false;
  return true;
}

bool FinMap::is_bijective() const {
  if (cod_ != dom())
    return false;
  std::vector<bool> seen(table_.size(), false);
  for (nat v : table_) {
    if (seen[v - 1])
      return false;
    seen[v - 1] = true;
  }
  return true;
}

Perm::Perm(std::vector<nat> table) : table_(std::move(table)) {
  std::vector<bool> seen(table_.size(), false);
  for (nat v : table_) {
    if (v < 1 || v > table_.size() || seen[v - 1])
      fail(errc::range_error, "table is not a bijection");
    seen[v - 1] = true;
  }
}

Perm Perm::unchecked(std::vector<nat> table) {
  return Perm(std::move(table), unchecked_tag{});
}

bool Perm::is_identity() const {
  for (nat i = 0; i < table_.size(); ++i)
    if (table_[i] != i + 1)
      return false;
  return true;
}

Cycles::Cycles(nat degree, std::vector<std::vector<nat>> cycles)
    : degree_(degree), cycles_(std::move(cycles)) {
  std::vector<bool> seen(degree_, false);
  for (auto &cycle : cycles_) {
    if (cycle.size() < 2)
      fail(errc::malformed_cycles, "cycle shorter than 2 points");
    for (nat v : cycle) {
      if (v < 1 || v > degree_)
        fail(errc::malformed_cycles, "point " + std::to_string(v) +
                                         " outside 1.." +
                                         std::to_string(degree_));
      if (seen[v - 1])
        fail(errc::malformed_cycles,
             "point " + std::to_string(v) + " repeated");
      seen[v - 1] = true;
    }
    auto smallest = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), smallest, cycle.end());
  }
  std::sort(cycles_.begin(), cycles_.end(),
            [](const auto &a, const auto &b) { return a.front() < b.front(); });
}

Perm identity(nat n) {
  std::vector<nat> table(n);
  std::iota(table.begin(), table.end(), nat{1});
  return Perm::unchecked(std::move(table));
}

FinMap compose(const FinMap &g, const FinMap &f) {
  if (f.cod() != g.dom())
    fail(errc::domain_mismatch, "cod " + std::to_string(f.cod()) +
                                    " does not match dom " +
                                    std::to_string(g.dom()));
  std::vector<nat> table(f.dom());
  for (nat i = 1; i <= f.dom(); ++i)
    table[i - 1] = g(f(i));
  return FinMap(g.cod(), std::move(table));
}

Perm compose(const Perm &g, const Perm &f) {
  if (f.degree() != g.degree())
    fail(errc::domain_mismatch, "degrees differ: " +
                                    std::to_string(f.degree()) + " vs " +
                                    std::to_string(g.degree()));
  std::vector<nat> table(f.degree());
  for (nat i = 1; i <= f.degree(); ++i)
    table[i - 1] = g(f(i));
  return Perm::unchecked(std::move(table));
}

Perm invert(const Perm &p) {
  std::vector<nat> table(p.degree());
  for (nat i = 1; i <= p.degree(); ++i)
    table[p(i) - 1] = i;
  return Perm::unchecked(std::move(table));
}

Cycles to_cycles(const Perm &p) {
  std::vector<std::vector<nat>> cycles;
  std::vector<bool> seen(p.degree(), false);
  for (nat start = 1; start <= p.degree(); ++start) {
    if (seen[start - 1] || p(start) == start)
      continue;
    std::vector<nat> cycle;
    for (nat i = start; !seen[i - 1]; i = p(i)) {
      cycle.push_back(i);
      seen[i - 1] = true;
    }
    cycles.push_back(std::move(cycle));
  }
  return Cycles(p.degree(), std::move(cycles));
}

Perm from_cycles(const Cycles &c) {
  std::vector<nat> table(c.degree());
  std::iota(table.begin(), table.end(), nat{1});
  for (const auto &cycle : c.cycles())
    for (std::size_t k = 0; k < cycle.size(); ++k)
      table[cycle[k] - 1] = cycle[(k + 1) % cycle.size()];
  return Perm::unchecked(std::move(table));
}

nat order(const Perm &p) {
  nat result = 1;
  for (const auto &cycle : to_cycles(p).cycles()) {
    nat len = cycle.size();
    nat g = std::gcd(result, len);
    result = checked_mul(result / g, len);
  }
  return result;
}

std::string print_cycles(const Cycles &c) {
  std::ostringstream out;
  if (c.cycles().empty()) {
    out << "()_" << c.degree();
    return out.str();
  }
  for (const auto &cycle : c.cycles()) {
    out << '(';
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      if (k)
        out << ',';
      out << cycle[k];
    }
    out << ")_" << c.degree();
  }
  return out.str();
}

namespace {

class CycleParser {
public:
  explicit CycleParser(const std::string &text) : text_(text) {}

  Cycles run() {
    std::vector<std::vector<nat>> cycles;
    skip_ws();
    if (peek() != '(')
      fail_here("expected '('");
    bool saw_degree = false;
    nat degree = 0;
    while (true) {
      cycles.push_back(parse_cycle());
      skip_ws();
      if (peek() == '_') {
        ++pos_;
        nat d = parse_number();
        if (saw_degree && d != degree)
          fail_here("conflicting degrees");
        degree = d;
        saw_degree = true;
        skip_ws();
      }
      if (pos_ == text_.size())
        break;
      if (peek() != '(')
        fail_here("expected '(' or end of input");
    }
    if (!saw_degree)
      fail_here("missing '_degree' suffix");
    if (cycles.size() == 1 && cycles.front().empty())
      cycles.clear();
    for (const auto &cycle : cycles)
      if (cycle.empty())
        fail_here("empty cycle in multi-cycle input");
    try {
      return Cycles(degree, std::move(cycles));
    } catch (const error &e) {
      throw error(errc::parse_error, std::string(e.what()) + " at offset " +
                                         std::to_string(pos_));
    }
  }

private:
  std::vector<nat> parse_cycle() {
    skip_ws();
    if (peek() != '(')
      fail_here("expected '('");
    ++pos_;
    std::vector<nat> cycle;
    skip_ws();
    if (peek() == ')') {
      ++pos_;
      return cycle; // "()": identity presentation
    }
    while (true) {
      cycle.push_back(parse_number());
      skip_ws();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      if (peek() == ')') {
        ++pos_;
        return cycle;
      }
      fail_here("expected ',' or ')'");
    }
  }

  nat parse_number() {
    skip_ws();
    if (pos_ == text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail_here("expected a number");
    nat value = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = checked_add(checked_mul(value, 10), nat(text_[pos_] - '0'));
      ++pos_;
    }
    return value;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  [[noreturn]] void fail_here(const std::string &msg) {
    fail(errc::parse_error, msg + " at offset " + std::to_string(pos_));
  }

  const std::string &text_;
  std::size_t pos_ = 0;
};

} // namespace

Cycles parse_cycles(const std::string &text) { return CycleParser(text).run(); }

Perm adjacent_transposition(nat i, nat n) {
  if (i < 1 || i + 1 > n)
    fail(errc::index_out_of_range, "transposition (" + std::to_string(i) +
                                       "," + std::to_string(i + 1) +
                                       ") does not fit in degree " +
                                       std::to_string(n));
  std::vector<nat> table(n);
  std::iota(table.begin(), table.end(), nat{1});
  std::swap(table[i - 1], table[i]);
  return Perm::unchecked(std::move(table));
}

std::vector<nat> decompose_adjacent(const Perm &p) {
  // Selection-sort the table back to the identity; the swaps applied, read
  // in reverse, rebuild p outermost-first.
  std::vector<nat> work = p.table();
  std::vector<nat> applied;
  for (nat target = work.size(); target >= 1; --target) {
    nat pos = 0;
    for (nat i = 1; i <= work.size(); ++i)
      if (work[i - 1] == target) {
        pos = i;
        break;
      }
    while (pos < target) {
      std::swap(work[pos - 1], work[pos]);
      applied.push_back(pos);
      ++pos;
    }
  }
  std::reverse(applied.begin(), applied.end());
  return applied;
}

Perm compose_adjacent(const std::vector<nat> &indices, nat n) {
  Perm acc = identity(n);
  // Leftmost index is outermost, so fold from the right.
  for (auto it = indices.rbegin(); it != indices.rend(); ++it)
    acc = compose(adjacent_transposition(*it, n), acc);
  return acc;
}

std::string describe(const FinMap &f) {
  std::ostringstream out;
  out << '[' << f.dom() << "->" << f.cod() << ':';
  for (nat i = 1; i <= f.dom(); ++i) {
    if (i > 1)
      out << ',';
    out << f(i);
  }
  out << ']';
  return out.str();
}

} // namespace rigcat
