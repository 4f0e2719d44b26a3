#pragma once

#include <array>
#include <cstddef>
#include <string>

#include "octal/families.hpp"
#include "octal/rules.hpp"

// Closed forms for the 0.33 game (remove one vertex or two adjacent vertices
// without disconnecting) on paths, cycles, subdivided stars and bistars.
namespace octal::c033 {

GrundyValue path_grundy(std::size_t n);
// Throws std::invalid_argument for n < 3.
GrundyValue cycle_grundy(std::size_t n);

// A star after every arm length is taken mod 3 and empty arms are dropped.
// Stars left with at most two arms are paths and are kept as such.
class ReducedStar {
 public:
  enum class Shape { EmptyGraph, SmallPath, ProperStar };

  static ReducedStar empty_graph() { return ReducedStar(Shape::EmptyGraph, 0, 0, 0); }
  static ReducedStar small_path(unsigned size);
  static ReducedStar proper_star(unsigned ones, unsigned twos);

  Shape shape() const { return shape_; }
  // SmallPath only: vertex count, 1..5.
  unsigned path_size() const { return path_size_; }
  // ProperStar only: counts of length-1 and length-2 arms (ones + twos >= 3).
  unsigned ones() const { return ones_; }
  unsigned twos() const { return twos_; }

  std::string str() const;
  friend bool operator==(const ReducedStar&, const ReducedStar&) = default;

 private:
  ReducedStar(Shape s, unsigned size, unsigned ones, unsigned twos)
      : shape_(s), path_size_(size), ones_(ones), twos_(twos) {}
  Shape shape_;
  unsigned path_size_;
  unsigned ones_;
  unsigned twos_;
};

ReducedStar reduce_star(const StarSpec& spec);

// Grundy value of the reduced star with `arms` arms, `twos` of them of
// length 2 (0 <= twos <= arms). Row 0 is P_1.
GrundyValue star_table_value(std::size_t arms, std::size_t twos);

GrundyValue star_grundy(const StarSpec& spec);
GrundyValue star_grundy(const ReducedStar& star);

// Classes of the equivalence "joined through a single edge".
enum class ClassSim1 { C0, C1, C1star, C2, C2star, C2box, C3, C3box };
// Classes of the equivalence "joined through a path of two edges".
enum class ClassSim2 { D0, D0star, D1, D1star, D1box, D2, D2star, D2box, D3, D3box };

inline constexpr std::array<ClassSim1, 8> kAllSim1 = {
    ClassSim1::C0, ClassSim1::C1,    ClassSim1::C1star, ClassSim1::C2,
    ClassSim1::C2star, ClassSim1::C2box, ClassSim1::C3, ClassSim1::C3box};
inline constexpr std::array<ClassSim2, 10> kAllSim2 = {
    ClassSim2::D0,    ClassSim2::D0star, ClassSim2::D1,    ClassSim2::D1star, ClassSim2::D1box,
    ClassSim2::D2,    ClassSim2::D2star, ClassSim2::D2box, ClassSim2::D3,     ClassSim2::D3box};

const char* to_string(ClassSim1 c);
const char* to_string(ClassSim2 c);

// Absent stars are classified as the empty graph (C0 / D0star).
ClassSim1 classify_sim1(const StarSpec& spec);
ClassSim1 classify_sim1(const ReducedStar& star);
ClassSim2 classify_sim2(const StarSpec& spec);
ClassSim2 classify_sim2(const ReducedStar& star);

// Grundy value every member of the class has.
GrundyValue class_value(ClassSim1 c);
GrundyValue class_value(ClassSim2 c);

// One cell of a bistar product table.
struct TableCell {
  enum class Kind { Xor, XorOne, Constant };
  Kind kind = Kind::Xor;
  GrundyValue constant = 0;

  GrundyValue apply(GrundyValue g, GrundyValue h) const;
  friend bool operator==(const TableCell&, const TableCell&) = default;
};

TableCell table1_cell(ClassSim1 a, ClassSim1 b);
TableCell table2_cell(ClassSim2 a, ClassSim2 b);

// Value of S -1- S' (resp. S -2- S') given the classes and star values.
GrundyValue table1_lookup(ClassSim1 a, ClassSim1 b, GrundyValue ga, GrundyValue gb);
GrundyValue table2_lookup(ClassSim2 a, ClassSim2 b, GrundyValue ga, GrundyValue gb);

GrundyValue bistar_grundy(const BistarSpec& spec);

}  // namespace octal::c033
