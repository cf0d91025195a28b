#include "xlag/maya.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "xlag/exact/rational.hpp"

namespace xlag {

namespace {

void validate_list(const std::vector<int>& v, const char* side) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 0) throw ValidationError(std::string("negative entry in ") + side + " list");
    if (i > 0 && v[i] >= v[i - 1]) throw ValidationError(std::string(side) + " list is not strictly decreasing");
  }
}

std::string join(const std::vector<int>& v) {
  if (v.empty()) return "\xE2\x88\x85";  // ∅
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

std::vector<int> parse_side(std::string s, const std::string& text) {
  std::string t;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
  if (t.empty() || t == "\xE2\x88\x85") return {};
  std::vector<int> out;
  std::stringstream ss(t);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || !std::all_of(item.begin(), item.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw ParseError("malformed diagram '" + text + "'");
    out.push_back(std::stoi(item));
  }
  if (!t.empty() && t.back() == ',') throw ParseError("malformed diagram '" + text + "'");
  return out;
}

}  // namespace

MayaDiagram::MayaDiagram(std::vector<int> excl, std::vector<int> incl)
    : excluded(std::move(excl)), included(std::move(incl)) {
  validate_list(excluded, "excluded");
  validate_list(included, "included");
}

bool MayaDiagram::filled(int box) const {
  if (box >= 0) return std::find(included.begin(), included.end(), box) != included.end();
  return std::find(excluded.begin(), excluded.end(), -box - 1) == excluded.end();
}

bool MayaDiagram::is_canonical() const { return excluded.empty() && !filled(0); }

bool MayaDiagram::is_conjugate_canonical() const { return included.empty() && filled(-1); }

std::string MayaDiagram::to_string() const { return "(" + join(excluded) + "|" + join(included) + ")"; }

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0) throw ValidationError("negative partition part");
    if (i > 0 && parts[i] > parts[i - 1]) throw ValidationError("partition parts not weakly decreasing");
  }
}

int Partition::size() const {
  int s = 0;
  for (int p : parts) s += p;
  return s;
}

std::string Partition::to_string() const {
  if (parts.empty()) return "\xE2\x88\x85";
  return "(" + join(parts) + ")";
}

std::string DiagramPair::to_string() const { return m1.to_string() + " " + m2.to_string(); }

MayaDiagram parse_diagram(const std::string& text) {
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
  if (t.size() < 3 || t.front() != '(' || t.back() != ')') throw ParseError("malformed diagram '" + text + "'");
  const std::string body = t.substr(1, t.size() - 2);
  const auto bar = body.find('|');
  if (bar == std::string::npos || body.find('|', bar + 1) != std::string::npos)
    throw ParseError("malformed diagram '" + text + "'");
  return MayaDiagram(parse_side(body.substr(0, bar), text), parse_side(body.substr(bar + 1), text));
}

MayaDiagram shift(const MayaDiagram& m, int t) {
  const int max_excl = m.excluded.empty() ? 0 : m.excluded.front();
  const int max_incl = m.included.empty() ? 0 : m.included.front();
  const int span = (t < 0 ? -t : t) + 2;
  MayaDiagram out;
  for (int p = max_incl + span; p >= 0; --p)
    if (m.filled(p - t)) out.included.push_back(p);
  for (int p = -max_excl - 1 - span; p < 0; ++p)
    if (!m.filled(p - t)) out.excluded.push_back(-p - 1);
  return out;
}

int canonical_shift(const MayaDiagram& m) {
  if (!m.excluded.empty()) return m.excluded.front() + 1;
  int k = 0;
  while (m.filled(k)) ++k;
  return -k;
}

int conjugate_canonical_shift(const MayaDiagram& m) {
  if (!m.included.empty()) return -(m.included.front() + 1);
  int k = 0;
  while (!m.filled(-k - 1)) ++k;
  return k;
}

Partition to_partition(const MayaDiagram& m) {
  if (!m.excluded.empty()) throw ValidationError("to_partition: diagram " + m.to_string() + " has excluded entries");
  const int r = static_cast<int>(m.included.size());
  std::vector<int> parts;
  for (int j = 1; j <= r; ++j) parts.push_back(m.included[static_cast<std::size_t>(j - 1)] - r + j);
  return Partition(parts);
}

Partition to_conjugate_partition(const MayaDiagram& m) {
  if (!m.included.empty())
    throw ValidationError("to_conjugate_partition: diagram " + m.to_string() + " has included entries");
  const int r = static_cast<int>(m.excluded.size());
  std::vector<int> parts;
  for (int j = 1; j <= r; ++j) parts.push_back(m.excluded[static_cast<std::size_t>(j - 1)] - r + j);
  return Partition(parts);
}

int partition_length(const MayaDiagram& m, int t) {
  const int r1 = static_cast<int>(m.included.size());
  const int r4 = static_cast<int>(m.excluded.size());
  if (t > 0) return r1 + m.excluded.front() + 1 - r4;
  if (t == 0) return r1;
  int k = 0;
  while (m.filled(k)) ++k;
  return r1 - k;
}

bool is_even(const Partition& p) {
  if (p.length() % 2 != 0) return false;
  for (int j = 0; j + 1 < p.length(); j += 2)
    if (p.parts[static_cast<std::size_t>(j)] != p.parts[static_cast<std::size_t>(j + 1)]) return false;
  return true;
}

Partition conjugate(const Partition& p) {
  std::vector<int> out;
  const int w = p.empty() ? 0 : p.parts.front();
  for (int c = 1; c <= w; ++c) {
    int len = 0;
    for (int part : p.parts)
      if (part >= c) ++len;
    out.push_back(len);
  }
  return Partition(out);
}

std::vector<int> index_sequence(const Partition& p) {
  const int r = p.length();
  std::vector<int> n;
  for (int i = 1; i <= r; ++i) n.push_back(p.parts[static_cast<std::size_t>(i - 1)] + r - i);
  return n;
}

}  // namespace xlag
