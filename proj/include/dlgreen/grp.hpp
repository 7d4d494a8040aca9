#ifndef DLGREEN_GRP_HPP
#define DLGREEN_GRP_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "dlgreen/rings.hpp"

namespace dlgreen {

/// A 2x2 matrix over a truncated ring, entries stored as ring codes in
/// row-major order [a b; c d].  Plain value type; also used for frame
/// arithmetic over the quadratic extension ring, where the matrix need
/// not be invertible or rational.
struct Mat2 {
  const TruncRing* ring = nullptr;
  std::array<int, 4> e{0, 0, 0, 0};

  static Mat2 identity(const TruncRing& R) { return Mat2{&R, {R.one(), 0, 0, R.one()}}; }

  Mat2 operator*(const Mat2& o) const;
  Mat2 operator+(const Mat2& o) const;
  Mat2 operator-(const Mat2& o) const;
  bool operator==(const Mat2& o) const { return ring == o.ring && e == o.e; }

  int det() const;
  bool is_invertible() const { return ring->is_unit(det()); }
  Mat2 inverse() const;

  Mat2 frobenius(int q) const;
  Mat2 truncated(int lvl) const;
  bool is_scalar() const { return e[1] == 0 && e[2] == 0 && e[0] == e[3]; }

  long code() const;  // mixed-radix over the ring size
  static Mat2 from_code(const TruncRing& R, long code);
};

class GroupTable;

/// A subgroup of an enumerated group, kept as a sorted index set plus a
/// membership mask.  Closure under product and inverse is verified when
/// constructed from a raw index set.
class Subgroup {
public:
  Subgroup() = default;
  Subgroup(const GroupTable& g, std::vector<int> elems, bool verify = true);

  const GroupTable* parent = nullptr;
  std::vector<int> elems;    // sorted element indices
  std::vector<char> member;  // size |G|

  long order() const { return static_cast<long>(elems.size()); }
  bool contains(int i) const { return member[i] != 0; }
  bool is_abelian() const;
  /// Position of element index i inside elems, or -1.
  int position(int i) const;
};

/// The finite group GL_2(O_r) fully enumerated, with conjugacy classes,
/// element orders and Jordan decompositions precomputed.  Elements are
/// addressed by dense indices; index 0 .. order-1 follows increasing
/// matrix code, so all derived data is deterministic.
class GroupTable {
public:
  explicit GroupTable(const TruncRing& ring, long size_limit = 1000000);
  GroupTable(const GroupTable&) = delete;
  GroupTable& operator=(const GroupTable&) = delete;

  const TruncRing& ring;
  int p;  // residue characteristic

  long order() const { return static_cast<long>(elems_.size()); }
  const Mat2& element(int i) const { return elems_[i]; }
  int index_of(const Mat2& m) const;
  int identity() const { return id_; }

  int mul(int i, int j) const;
  int inv(int i) const { return inv_[i]; }
  /// x^h = h^{-1} x h (right-conjugation convention).
  int conj(int x, int h) const;
  int pow(int i, long e) const;

  long element_order(int i) const { return order_[i]; }
  /// Jordan decomposition g = s u = u s with s of prime-to-p order and u
  /// of p-power order, both powers of g.
  std::pair<int, int> jordan(int i) const { return {jordan_s_[i], jordan_u_[i]}; }
  bool is_semisimple(int i) const { return order_[i] % p != 0; }
  bool is_unipotent(int i) const;
  /// The independent matrix-side test: (g-1)^{2r} = 0.
  bool is_unipotent_matrix_test(int i) const;
  bool is_central(int i) const { return elems_[i].is_scalar(); }

  int num_classes() const { return static_cast<int>(class_reps_.size()); }
  int class_of(int i) const { return class_id_[i]; }
  const std::vector<int>& class_reps() const { return class_reps_; }
  const std::vector<long>& class_sizes() const { return class_sizes_; }

  const std::vector<int>& center() const { return center_; }

  /// (G^i)^F = kernel of reduction to level i.
  Subgroup congruence_kernel(int lvl) const;
  Subgroup centralizer(int s) const;
  /// { h : h^{-1} s h lies in the subset }, i.e. s is in the h-conjugate
  /// of the subset.
  std::vector<int> transporter_to(int s, const std::vector<char>& subset_mask) const;
  Subgroup generate(const std::vector<int>& gens) const;
  /// One representative per left coset gH, smallest element index first.
  std::vector<int> left_transversal(const Subgroup& h) const;

  Subgroup whole_group() const;

private:
  std::vector<Mat2> elems_;
  std::vector<int32_t> code_to_index_;
  std::vector<int32_t> inv_;
  std::vector<int64_t> order_;
  std::vector<int32_t> jordan_s_, jordan_u_;
  std::vector<int32_t> class_id_;
  std::vector<int> class_reps_;
  std::vector<long> class_sizes_;
  std::vector<int> center_;
  int id_ = -1;
};

/// |GL_2(F_q)| q^{4(r-1)}, the expected order of GL_2(O_r).
long gl2_order_formula(int q, int r);

}  // namespace dlgreen

#endif
