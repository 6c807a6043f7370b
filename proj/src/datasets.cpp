#include "qcl/datasets.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "json.hpp"

namespace qcl {

namespace {

constexpr std::uint16_t kAllOnes = 0xffff;

}  // namespace

BinaryImage BinaryImage::from_packed(std::uint16_t packed) {
  BinaryImage img;
  img.packed_ = packed;
  return img;
}

BinaryImage BinaryImage::from_pixels(std::span<const int> pixels) {
  if (pixels.size() != 16) {
    throw DataError("image requires 16 pixels, got " + std::to_string(pixels.size()));
  }
  std::uint16_t packed = 0;
  for (std::size_t i = 0; i < 16; ++i) {
    if (pixels[i] != 0 && pixels[i] != 1) {
      throw DataError("non-binary pixel value " + std::to_string(pixels[i]) +
                      " at index " + std::to_string(i));
    }
    packed = static_cast<std::uint16_t>(packed | (pixels[i] << i));
  }
  return from_packed(packed);
}

std::array<int, 16> BinaryImage::pixels() const {
  std::array<int, 16> out{};
  for (int i = 0; i < 16; ++i) out[static_cast<std::size_t>(i)] = (packed_ >> i) & 1;
  return out;
}

BinaryImage BinaryImage::rotate90() const {
  std::uint16_t packed = 0;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      if (pixel(3 - c, r)) packed = static_cast<std::uint16_t>(packed | (1 << (r * 4 + c)));
    }
  }
  return from_packed(packed);
}

std::array<int, 4> BinaryImage::quadrant_bits(int quadrant) const {
  const int r0 = (quadrant / 2) * 2;
  const int c0 = (quadrant % 2) * 2;
  return {pixel(r0, c0), pixel(r0, c0 + 1), pixel(r0 + 1, c0), pixel(r0 + 1, c0 + 1)};
}

int BinaryImage::quadrant_sum(int quadrant) const {
  const auto bits = quadrant_bits(quadrant);
  return bits[0] + bits[1] + bits[2] + bits[3];
}

std::string BinaryImage::to_grid_text() const {
  std::string out;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) out += pixel(r, c) ? '1' : '0';
    out += '\n';
  }
  return out;
}

bool is_bas(const BinaryImage& image) {
  const std::uint16_t p = image.packed();
  if (p == 0 || p == kAllOnes) return false;
  bool rows_constant = true;
  bool cols_constant = true;
  for (int r = 0; r < 4 && rows_constant; ++r) {
    for (int c = 1; c < 4; ++c) {
      if (image.pixel(r, c) != image.pixel(r, 0)) {
        rows_constant = false;
        break;
      }
    }
  }
  for (int c = 0; c < 4 && cols_constant; ++c) {
    for (int r = 1; r < 4; ++r) {
      if (image.pixel(r, c) != image.pixel(0, c)) {
        cols_constant = false;
        break;
      }
    }
  }
  return rows_constant || cols_constant;
}

bool is_diagonal(const BinaryImage& image) {
  const std::uint16_t p = image.packed();
  if (p == 0 || p == kAllOnes) return false;
  // Non-wrapping diagonals: value a function of r-c, or of r+c.
  bool down_constant = true;  // along r-c
  bool up_constant = true;    // along r+c
  int down_value[7], up_value[7];
  std::fill(std::begin(down_value), std::end(down_value), -1);
  std::fill(std::begin(up_value), std::end(up_value), -1);
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      const int v = image.pixel(r, c);
      int& dv = down_value[r - c + 3];
      if (dv == -1) dv = v;
      else if (dv != v) down_constant = false;
      int& uv = up_value[r + c];
      if (uv == -1) uv = v;
      else if (uv != v) up_constant = false;
    }
  }
  return down_constant || up_constant;
}

std::vector<BinaryImage> generate_bas() {
  std::set<std::uint16_t> keys;
  for (int pattern = 1; pattern < 15; ++pattern) {  // skip all-zeros, all-ones
    std::uint16_t stripes = 0, bars = 0;
    for (int r = 0; r < 4; ++r) {
      for (int c = 0; c < 4; ++c) {
        if ((pattern >> r) & 1) stripes = static_cast<std::uint16_t>(stripes | (1 << (r * 4 + c)));
        if ((pattern >> c) & 1) bars = static_cast<std::uint16_t>(bars | (1 << (r * 4 + c)));
      }
    }
    keys.insert(stripes);
    keys.insert(bars);
  }
  std::vector<BinaryImage> out;
  out.reserve(keys.size());
  for (std::uint16_t k : keys) out.push_back(BinaryImage::from_packed(k));
  return out;
}

std::vector<BinaryImage> generate_diagonals() {
  std::set<std::uint16_t> keys;
  for (int pattern = 1; pattern < 127; ++pattern) {  // 7 diagonals per direction
    std::uint16_t down = 0, up = 0;
    for (int r = 0; r < 4; ++r) {
      for (int c = 0; c < 4; ++c) {
        if ((pattern >> (r - c + 3)) & 1) down = static_cast<std::uint16_t>(down | (1 << (r * 4 + c)));
        if ((pattern >> (r + c)) & 1) up = static_cast<std::uint16_t>(up | (1 << (r * 4 + c)));
      }
    }
    keys.insert(down);
    keys.insert(up);
  }
  std::vector<BinaryImage> out;
  out.reserve(keys.size());
  for (std::uint16_t k : keys) out.push_back(BinaryImage::from_packed(k));
  return out;
}

std::vector<BinaryImage> generate_perturbed(Rng& rng, int count,
                                            std::span<const BinaryImage> exclude) {
  if (count < 1) throw DataError("generate_perturbed: count must be >= 1");
  std::vector<BinaryImage> canonical = generate_bas();
  {
    auto diag = generate_diagonals();
    canonical.insert(canonical.end(), diag.begin(), diag.end());
  }
  std::unordered_set<std::uint16_t> canonical_keys;
  for (const auto& img : canonical) canonical_keys.insert(img.packed());
  std::unordered_set<std::uint16_t> used;
  for (const auto& img : exclude) used.insert(img.packed());

  std::vector<BinaryImage> out;
  out.reserve(static_cast<std::size_t>(count));
  long attempts = 0;
  const long max_attempts = 10000L * count;
  while (static_cast<int>(out.size()) < count) {
    if (++attempts > max_attempts) {
      throw DataError("generate_perturbed: rejection sampling exhausted");
    }
    const auto& base = canonical[rng.next_below(canonical.size())];
    const int flip = static_cast<int>(rng.next_below(16));
    const std::uint16_t candidate =
        static_cast<std::uint16_t>(base.packed() ^ (1 << flip));
    if (canonical_keys.count(candidate) || used.count(candidate)) continue;
    used.insert(candidate);
    out.push_back(BinaryImage::from_packed(candidate));
  }
  return out;
}

ContrastiveSet make_contrastive_set(std::vector<BinaryImage> images) {
  std::set<std::uint16_t> seen;
  for (const auto& img : images) {
    if (!seen.insert(img.packed()).second) {
      throw DataError("make_contrastive_set: duplicate base image");
    }
  }
  ContrastiveSet set;
  set.augmented.reserve(images.size());
  for (const auto& img : images) set.augmented.push_back(img.rotate90());
  set.base = std::move(images);
  return set;
}

namespace {

bool has_rotation_pair(const std::vector<LabeledImage>& items) {
  for (const auto& a : items) {
    const BinaryImage rotated = a.image.rotate90();
    for (const auto& b : items) {
      if (b.image == rotated && !(b.image == a.image)) return true;
    }
  }
  return false;
}

}  // namespace

Partition draw_partition(Rng& rng, int n_train, int n_test, bool avoid_rotation_pairs) {
  if (n_train < 2 || n_train % 2 != 0) {
    throw DataError("draw_partition: n_train must be even and positive");
  }
  if (n_test < 2 || n_test % 2 != 0) {
    throw DataError("draw_partition: n_test must be even and positive");
  }
  const auto bas = generate_bas();
  const auto diag = generate_diagonals();
  const int per_class_train = n_train / 2;
  const int per_class_test = n_test / 2;
  for (const auto* family : {&bas, &diag}) {
    if (static_cast<int>(family->size()) < per_class_train + per_class_test) {
      throw DataError("draw_partition: class too small for requested split");
    }
  }

  for (int attempt = 0; attempt < 1000; ++attempt) {
    Partition part;
    for (const auto& [family, label] :
         {std::pair{&bas, kLabelBas}, std::pair{&diag, kLabelDiagonal}}) {
      std::vector<int> order(family->size());
      for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
      rng.shuffle(order);
      for (int i = 0; i < per_class_train; ++i) {
        part.train.push_back({(*family)[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])], label});
      }
      for (int i = 0; i < per_class_test; ++i) {
        part.test.push_back(
            {(*family)[static_cast<std::size_t>(order[static_cast<std::size_t>(per_class_train + i)])], label});
      }
    }
    if (avoid_rotation_pairs && has_rotation_pair(part.train)) continue;
    return part;
  }
  throw DataError("draw_partition: could not draw a rotation-free training set");
}

std::string images_manifest_json(std::string_view generator, std::uint64_t seed,
                                 std::span<const LabeledImage> images) {
  nlohmann::ordered_json doc;
  doc["format"] = "qcl-manifest-v1";
  doc["generator"] = std::string(generator);
  doc["seed"] = seed;
  doc["count"] = images.size();
  auto& list = doc["images"] = nlohmann::ordered_json::array();
  for (const auto& item : images) {
    nlohmann::ordered_json entry;
    entry["pixels"] = item.image.pixels();
    entry["label"] = item.label;
    list.push_back(std::move(entry));
  }
  return doc.dump(2) + "\n";
}

std::vector<LabeledImage> parse_images_manifest(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("manifest is not valid JSON: ") + e.what());
  }
  const std::string format = doc.value("format", "<missing>");
  if (format != "qcl-manifest-v1") {
    throw DataError("unsupported manifest format '" + format +
                    "', expected qcl-manifest-v1");
  }
  std::vector<LabeledImage> out;
  for (const auto& entry : doc.at("images")) {
    const auto pixels = entry.at("pixels").get<std::vector<int>>();
    const int label = entry.at("label").get<int>();
    if (label != kLabelBas && label != kLabelDiagonal) {
      throw DataError("manifest label out of range: " + std::to_string(label));
    }
    out.push_back({BinaryImage::from_pixels(pixels), label});
  }
  return out;
}

}  // namespace qcl
