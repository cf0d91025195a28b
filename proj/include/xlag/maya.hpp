#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace xlag {

class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A Maya diagram in (n' | n) normal form. Box k >= 0 is filled iff k is in
// `included`; box k < 0 is empty iff -k-1 is in `excluded`. Both lists are
// strictly decreasing and non-negative.
struct MayaDiagram {
  std::vector<int> excluded;  // n'_1 > ... > n'_{r4} >= 0
  std::vector<int> included;  // n_1 > ... > n_{r1} >= 0

  MayaDiagram() = default;
  MayaDiagram(std::vector<int> excl, std::vector<int> incl);

  bool filled(int box) const;
  bool is_canonical() const;
  bool is_conjugate_canonical() const;
  bool operator==(const MayaDiagram&) const = default;
  std::string to_string() const;
};

// Weakly decreasing positive parts.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p);  // trims trailing zeros, validates order

  int length() const { return static_cast<int>(parts.size()); }
  int size() const;
  bool empty() const { return parts.empty(); }
  bool operator==(const Partition&) const = default;
  std::string to_string() const;
};

struct DiagramPair {
  MayaDiagram m1;
  MayaDiagram m2;

  int r1() const { return static_cast<int>(m1.included.size()); }
  int r2() const { return static_cast<int>(m2.included.size()); }
  int r3() const { return static_cast<int>(m2.excluded.size()); }
  int r4() const { return static_cast<int>(m1.excluded.size()); }
  int r() const { return r1() + r2() + r3() + r4(); }
  bool operator==(const DiagramPair&) const = default;
  std::string to_string() const;
};

// Grammar: '(' [int (',' int)*] '|' [int (',' int)*] ')'; "∅" is accepted for an empty side.
MayaDiagram parse_diagram(const std::string& text);

MayaDiagram shift(const MayaDiagram& m, int t);
int canonical_shift(const MayaDiagram& m);
int conjugate_canonical_shift(const MayaDiagram& m);

// Partition read from a diagram with no excluded entries: mu_j = n_j - r + j.
// Trailing zero parts (from 0 in the included list) are trimmed.
Partition to_partition(const MayaDiagram& m);
// Partition read from a diagram with no included entries: nu'_j = n'_j - r + j.
Partition to_conjugate_partition(const MayaDiagram& m);
// Length r(mu) of the canonical partition by the three-case shift formula.
int partition_length(const MayaDiagram& m, int t);

bool is_even(const Partition& p);
Partition conjugate(const Partition& p);

// Index sequence n_i = mu_i + r(mu) - i of a partition (strictly decreasing).
std::vector<int> index_sequence(const Partition& p);

}  // namespace xlag
