#include "octal/closed_form.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "octal/mex.hpp"

namespace octal::c033 {

GrundyValue path_grundy(std::size_t n) { return static_cast<GrundyValue>(n % 3); }

GrundyValue cycle_grundy(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  return static_cast<GrundyValue>(n % 3);
}

ReducedStar ReducedStar::small_path(unsigned size) {
  if (size < 1 || size > 5) throw std::invalid_argument("reduced small path has 1..5 vertices");
  return ReducedStar(Shape::SmallPath, size, 0, 0);
}

ReducedStar ReducedStar::proper_star(unsigned ones, unsigned twos) {
  if (ones + twos < 3) throw std::invalid_argument("proper star needs at least 3 arms");
  return ReducedStar(Shape::ProperStar, 0, ones, twos);
}

std::string ReducedStar::str() const {
  switch (shape_) {
    case Shape::EmptyGraph: return "empty";
    case Shape::SmallPath: return "P_" + std::to_string(path_size_);
    case Shape::ProperStar: {
      std::string out = "S_{";
      for (unsigned i = 0; i < ones_ + twos_; ++i) {
        if (i) out += ',';
        out += i < ones_ ? '1' : '2';
      }
      return out + "}";
    }
  }
  return "?";
}

ReducedStar reduce_star(const StarSpec& spec) {
  if (!spec.present()) return ReducedStar::empty_graph();
  unsigned ones = 0;
  unsigned twos = 0;
  for (unsigned len : spec.arms()) {
    if (len % 3 == 1) ++ones;
    if (len % 3 == 2) ++twos;
  }
  if (ones + twos <= 2) return ReducedStar::small_path(1 + ones + 2 * twos);
  return ReducedStar::proper_star(ones, twos);
}

namespace {

// Rows 0..rows-1 of the reduced star table. Rows 0-2 are paths; from row 3
// on the center can no longer be taken, so the options of (k, j) are:
// drop a length-1 arm (k-1, j), shorten a length-2 arm (k, j-1), or drop a
// length-2 arm (k-1, j-1).
std::vector<std::vector<GrundyValue>> build_star_rows(std::size_t rows) {
  std::vector<std::vector<GrundyValue>> t(rows);
  for (std::size_t k = 0; k < rows; ++k) {
    t[k].resize(k + 1);
    for (std::size_t j = 0; j <= k; ++j) {
      if (k <= 2) {
        t[k][j] = static_cast<GrundyValue>((1 + k + j) % 3);
        continue;
      }
      std::vector<GrundyValue> options;
      if (k - j >= 1) options.push_back(t[k - 1][j]);
      if (j >= 1) {
        options.push_back(t[k][j - 1]);
        options.push_back(t[k - 1][j - 1]);
      }
      t[k][j] = mex(options);
    }
  }
  return t;
}

constexpr std::size_t kCachedRows = 256;

const std::vector<std::vector<GrundyValue>>& star_rows() {
  static const auto rows = build_star_rows(kCachedRows);
  return rows;
}

}  // namespace

GrundyValue star_table_value(std::size_t arms, std::size_t twos) {
  if (twos > arms) throw std::invalid_argument("more length-2 arms than arms");
  if (arms < kCachedRows) return star_rows()[arms][twos];
  return build_star_rows(arms + 1)[arms][twos];
}

GrundyValue star_grundy(const ReducedStar& star) {
  switch (star.shape()) {
    case ReducedStar::Shape::EmptyGraph: return 0;
    case ReducedStar::Shape::SmallPath: return star.path_size() % 3;
    case ReducedStar::Shape::ProperStar:
      return star_table_value(star.ones() + star.twos(), star.twos());
  }
  return 0;
}

GrundyValue star_grundy(const StarSpec& spec) { return star_grundy(reduce_star(spec)); }

const char* to_string(ClassSim1 c) {
  switch (c) {
    case ClassSim1::C0: return "C0";
    case ClassSim1::C1: return "C1";
    case ClassSim1::C1star: return "C1*";
    case ClassSim1::C2: return "C2";
    case ClassSim1::C2star: return "C2*";
    case ClassSim1::C2box: return "C2box";
    case ClassSim1::C3: return "C3";
    case ClassSim1::C3box: return "C3box";
  }
  return "?";
}

const char* to_string(ClassSim2 c) {
  switch (c) {
    case ClassSim2::D0: return "D0";
    case ClassSim2::D0star: return "D0*";
    case ClassSim2::D1: return "D1";
    case ClassSim2::D1star: return "D1*";
    case ClassSim2::D1box: return "D1box";
    case ClassSim2::D2: return "D2";
    case ClassSim2::D2star: return "D2*";
    case ClassSim2::D2box: return "D2box";
    case ClassSim2::D3: return "D3";
    case ClassSim2::D3box: return "D3box";
  }
  return "?";
}

ClassSim1 classify_sim1(const ReducedStar& star) {
  using S = ReducedStar::Shape;
  switch (star.shape()) {
    case S::EmptyGraph: return ClassSim1::C0;
    case S::SmallPath:
      switch (star.path_size()) {
        case 1:
        case 4: return ClassSim1::C1star;
        case 2:
        case 5: return ClassSim1::C2star;
        default: return ClassSim1::C0;
      }
    case S::ProperStar: break;
  }
  if (star.ones() == 0 && star.twos() == 3) return ClassSim1::C1star;  // S_{2,2,2}
  const GrundyValue g = star_grundy(star);
  const bool odd_twos = star.twos() == 1 || star.twos() == 3;
  if (odd_twos && g == 2) return ClassSim1::C2box;
  if (odd_twos && g == 3) return ClassSim1::C3box;
  static constexpr ClassSim1 kPlain[] = {ClassSim1::C0, ClassSim1::C1, ClassSim1::C2,
                                         ClassSim1::C3};
  return kPlain[g];
}

ClassSim1 classify_sim1(const StarSpec& spec) { return classify_sim1(reduce_star(spec)); }

ClassSim2 classify_sim2(const ReducedStar& star) {
  using S = ReducedStar::Shape;
  switch (star.shape()) {
    case S::EmptyGraph: return ClassSim2::D0star;
    case S::SmallPath:
      switch (star.path_size()) {
        case 1:
        case 4: return ClassSim2::D1star;
        case 2:
        case 5: return ClassSim2::D2star;
        default: return ClassSim2::D0star;
      }
    case S::ProperStar: break;
  }
  if (star.ones() == 0 && star.twos() == 3) return ClassSim2::D1star;  // S_{2,2,2}
  const GrundyValue g = star_grundy(star);
  const unsigned b = star.twos();
  if (b == 0 || b == 2) {
    if (g == 0) return ClassSim2::D0star;
    if (g == 1) return ClassSim2::D1box;
  }
  if (b == 1 || b == 3) {
    if (g == 2) return ClassSim2::D2box;
    if (g == 3) return ClassSim2::D3box;
  }
  static constexpr ClassSim2 kPlain[] = {ClassSim2::D0, ClassSim2::D1, ClassSim2::D2,
                                         ClassSim2::D3};
  return kPlain[g];
}

ClassSim2 classify_sim2(const StarSpec& spec) { return classify_sim2(reduce_star(spec)); }

GrundyValue class_value(ClassSim1 c) {
  switch (c) {
    case ClassSim1::C0: return 0;
    case ClassSim1::C1:
    case ClassSim1::C1star: return 1;
    case ClassSim1::C2:
    case ClassSim1::C2star:
    case ClassSim1::C2box: return 2;
    case ClassSim1::C3:
    case ClassSim1::C3box: return 3;
  }
  return 0;
}

GrundyValue class_value(ClassSim2 c) {
  switch (c) {
    case ClassSim2::D0:
    case ClassSim2::D0star: return 0;
    case ClassSim2::D1:
    case ClassSim2::D1star:
    case ClassSim2::D1box: return 1;
    case ClassSim2::D2:
    case ClassSim2::D2star:
    case ClassSim2::D2box: return 2;
    case ClassSim2::D3:
    case ClassSim2::D3box: return 3;
  }
  return 0;
}

GrundyValue TableCell::apply(GrundyValue g, GrundyValue h) const {
  switch (kind) {
    case Kind::Xor: return g ^ h;
    case Kind::XorOne: return g ^ h ^ 1u;
    case Kind::Constant: return constant;
  }
  return 0;
}

namespace {

// Compact cell notation: 'x' = XOR, 'y' = XOR then XOR 1, digit = constant.
template <std::size_t N>
std::array<std::array<TableCell, N>, N> load_table(const std::array<const char*, N>& rows,
                                                   const char* name) {
  std::array<std::array<TableCell, N>, N> t{};
  for (std::size_t r = 0; r < N; ++r) {
    for (std::size_t c = 0; c < N; ++c) {
      const char ch = rows[r][c];
      if (ch == 'x') {
        t[r][c] = TableCell{TableCell::Kind::Xor, 0};
      } else if (ch == 'y') {
        t[r][c] = TableCell{TableCell::Kind::XorOne, 0};
      } else {
        t[r][c] = TableCell{TableCell::Kind::Constant, static_cast<GrundyValue>(ch - '0')};
      }
    }
  }
  for (std::size_t r = 0; r < N; ++r) {
    for (std::size_t c = 0; c < r; ++c) {
      if (!(t[r][c] == t[c][r])) {
        throw std::logic_error(std::string(name) + " is not symmetric");
      }
    }
  }
  return t;
}

// Row/column order follows kAllSim1.
const std::array<std::array<TableCell, 8>, 8>& table1() {
  static const auto t = load_table<8>({"xxxxxxxx",    // C0
                                       "xxxxxxxx",    // C1
                                       "xx2x0xxx",    // C1*
                                       "xxxxxxxx",    // C2
                                       "xx0x11x0",    // C2*
                                       "xxxx1xxx",    // C2box
                                       "xxxxxxxx",    // C3
                                       "xxxx0xxx"},   // C3box
                                      "product table for one-edge joins");
  return t;
}

// Row/column order follows kAllSim2.
const std::array<std::array<TableCell, 10>, 10>& table2() {
  static const auto t = load_table<10>({"xyx2yx0yxy",    // D0
                                        "yyy2yy0yyy",    // D0*
                                        "xyx3yx1yxy",    // D1
                                        "2230301110",    // D1*
                                        "yyy3yy1yyy",    // D1box
                                        "xyx0yx2yxy",    // D2
                                        "0011122233",    // D2*
                                        "yyy1yy20y1",    // D2box
                                        "xyx1yx3yxy",    // D3
                                        "yyy0yy31y0"},   // D3box
                                       "product table for two-edge joins");
  return t;
}

std::size_t index_of(ClassSim1 c) { return static_cast<std::size_t>(c); }
std::size_t index_of(ClassSim2 c) { return static_cast<std::size_t>(c); }

}  // namespace

TableCell table1_cell(ClassSim1 a, ClassSim1 b) { return table1()[index_of(a)][index_of(b)]; }
TableCell table2_cell(ClassSim2 a, ClassSim2 b) { return table2()[index_of(a)][index_of(b)]; }

GrundyValue table1_lookup(ClassSim1 a, ClassSim1 b, GrundyValue ga, GrundyValue gb) {
  return table1_cell(a, b).apply(ga, gb);
}

GrundyValue table2_lookup(ClassSim2 a, ClassSim2 b, GrundyValue ga, GrundyValue gb) {
  return table2_cell(a, b).apply(ga, gb);
}

namespace {

GrundyValue bistar_value(const BistarSpec& spec) {
  const auto& [left, m, right] = spec;
  const bool both = left.present() && right.present();
  if (m == 0) {
    if (!left.present()) return star_grundy(right);
    if (!right.present()) return star_grundy(left);
    auto arms = left.arms();
    arms.insert(arms.end(), right.arms().begin(), right.arms().end());
    return star_grundy(StarSpec(std::move(arms)));
  }
  switch (m % 3) {
    case 0: {
      if (both) {
        auto arms = left.arms();
        arms.insert(arms.end(), right.arms().begin(), right.arms().end());
        return star_grundy(StarSpec(std::move(arms)));
      }
      // With a side missing the middle path is an arm of m-1 = 2 (mod 3)
      // vertices; merging the centers (m = 0) would drop it.
      if (!left.present() && !right.present()) return path_grundy(m - 1);
      const StarSpec& side = left.present() ? left : right;
      return star_grundy(side.with_arm(2));
    }
    case 1: {
      const auto rl = reduce_star(left);
      const auto rr = reduce_star(right);
      return table1_lookup(classify_sim1(rl), classify_sim1(rr), star_grundy(rl), star_grundy(rr));
    }
    default: {
      const auto rl = reduce_star(left);
      const auto rr = reduce_star(right);
      return table2_lookup(classify_sim2(rl), classify_sim2(rr), star_grundy(rl), star_grundy(rr));
    }
  }
}

bool degenerate_identities_hold() {
  const auto none = StarSpec::absent();
  const auto lone = StarSpec{};
  if (bistar_value({none, 2, none}) != 1) return false;  // P_1
  if (bistar_value({lone, 1, lone}) != 2) return false;  // P_2
  for (unsigned ones = 0; ones <= 5; ++ones) {
    for (unsigned twos = 0; ones + twos <= 5; ++twos) {
      std::vector<unsigned> arms(ones, 1);
      arms.insert(arms.end(), twos, 2);
      const StarSpec s(arms);
      if (bistar_value({none, 1, s}) != star_grundy(s)) return false;
      if (bistar_value({s, 1, none}) != star_grundy(s)) return false;
    }
  }
  return true;
}

}  // namespace

GrundyValue bistar_grundy(const BistarSpec& spec) {
  static const bool sane = degenerate_identities_hold();
  if (!sane) throw std::logic_error("degenerate bistar identities do not hold");
  return bistar_value(spec);
}

}  // namespace octal::c033
