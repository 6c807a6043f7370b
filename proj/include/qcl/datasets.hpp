#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qcl/common.hpp"
#include "qcl/rng.hpp"

namespace qcl {

// 4x4 binary pixel grid. Pixels are stored row-major (bit r*4+c of the
// packed form); the quadrant-major view used by the circuit encoder is
// produced at the encoding boundary, not here.
class BinaryImage {
public:
  BinaryImage() = default;

  static BinaryImage from_packed(std::uint16_t packed);
  // 16 row-major values; anything other than 0/1 is a data error.
  static BinaryImage from_pixels(std::span<const int> pixels);

  int pixel(int row, int col) const {
    return (packed_ >> (row * 4 + col)) & 1;
  }
  std::uint16_t packed() const { return packed_; }
  std::array<int, 16> pixels() const;

  // 90 degree clockwise rotation: out(r, c) = in(3 - c, r).
  BinaryImage rotate90() const;

  // Quadrants indexed 0..3 in order top-left, top-right, bottom-left,
  // bottom-right; each flattened row-major to 4 bits.
  std::array<int, 4> quadrant_bits(int quadrant) const;
  int quadrant_sum(int quadrant) const;

  // Four text lines of '0'/'1' characters.
  std::string to_grid_text() const;

  auto operator<=>(const BinaryImage&) const = default;

private:
  std::uint16_t packed_ = 0;
};

inline constexpr int kLabelDiagonal = 0;
inline constexpr int kLabelBas = 1;

struct LabeledImage {
  BinaryImage image;
  int label;  // kLabelBas or kLabelDiagonal

  bool operator==(const LabeledImage&) const = default;
};

// Unlabeled images paired with their 90-degree rotations. Image index i in
// [0, n) is a base image and n + i its augmented partner; (i, n+i) are the
// positive pairs, every other pair is a negative.
struct ContrastiveSet {
  std::vector<BinaryImage> base;
  std::vector<BinaryImage> augmented;

  int n_base() const { return static_cast<int>(base.size()); }
  int total() const { return 2 * n_base(); }
  const BinaryImage& image(int index) const {
    return index < n_base() ? base[static_cast<std::size_t>(index)]
                            : augmented[static_cast<std::size_t>(index - n_base())];
  }
};

// Class membership predicates. Both classes exclude the all-zeros and
// all-ones grids.
bool is_bas(const BinaryImage& image);       // all rows constant or all columns constant
bool is_diagonal(const BinaryImage& image);  // constant along every diagonal of one direction

// All bars-and-stripes images (28 of them), sorted by packed value.
std::vector<BinaryImage> generate_bas();

// All diagonal-stripe images under the predicate above, sorted by packed
// value. The census is whatever the predicate yields; callers must not
// assume a particular count.
std::vector<BinaryImage> generate_diagonals();

// Single-pixel perturbations of canonical images: draw uniformly from
// BAS + diagonals, flip one uniformly chosen pixel, rejecting results that
// fall back into either canonical family, duplicate the batch, or appear in
// `exclude`. Deterministic for a fixed stream.
std::vector<BinaryImage> generate_perturbed(Rng& rng, int count,
                                            std::span<const BinaryImage> exclude = {});

// Pairs each image with its rotation. Duplicate inputs are a data error.
ContrastiveSet make_contrastive_set(std::vector<BinaryImage> images);

struct Partition {
  std::vector<LabeledImage> train;
  std::vector<LabeledImage> test;
};

// Balanced train/test split: n_train/2 + n_test/2 images per class, train
// and test disjoint, deterministic under the stream. With
// avoid_rotation_pairs set, draws whose training half contains an image
// together with its 90-degree rotation are rejected and redrawn.
Partition draw_partition(Rng& rng, int n_train, int n_test,
                         bool avoid_rotation_pairs = false);

// JSON manifest with provenance fields; parse rejects unknown schema
// versions with a DataError naming the version it found.
std::string images_manifest_json(std::string_view generator, std::uint64_t seed,
                                 std::span<const LabeledImage> images);
std::vector<LabeledImage> parse_images_manifest(const std::string& json_text);

}  // namespace qcl
