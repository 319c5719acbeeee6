// Checkpoint layout, all integers little-endian, doubles as IEEE-754 bits:
//
//   "ASTVECCK"  u32 version  u64 vocabulary fingerprint
//   hyper: u64 dim, f64 margin, f64 lambda, f64 lr, f64 momentum,
//          u64 epochs, u64 seed, u8 shuffle
//   u64 epoch  str rng_state  vec mean_hinge  vec objective
//   params (embeddings, w_left, w_right, bias)  velocity (same)
//
// str = u64 length + bytes; vec = u64 length + f64s;
// matrix = u64 rows + u64 cols + f64s in row-major order.

#include <bit>

#include "astvec/ast.hpp"
#include "astvec/error.hpp"
#include "astvec/trainer.hpp"

namespace astvec {
namespace {

constexpr std::string_view kMagic = "ASTVECCK";
constexpr std::uint32_t kVersion = 1;

class Writer {
 public:
  void raw(std::uint64_t v, int bytes) {
    for (int i = 0; i < bytes; ++i) out_.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
  }
  void u8(std::uint8_t v) { raw(v, 1); }
  void u32(std::uint32_t v) { raw(v, 4); }
  void u64(std::uint64_t v) { raw(v, 8); }
  void f64(double v) { u64(std::bit_cast<std::uint64_t>(v)); }
  void str(std::string_view s) {
    u64(s.size());
    out_.append(s);
  }
  void vec(const std::vector<double>& v) {
    u64(v.size());
    for (double x : v) f64(x);
  }
  template <typename M>
  void matrix(const M& m) {
    u64(static_cast<std::uint64_t>(m.rows()));
    u64(static_cast<std::uint64_t>(m.cols()));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j) f64(m(i, j));
  }
  void params(const ModelParams& p) {
    matrix(p.embeddings);
    matrix(p.w_left);
    matrix(p.w_right);
    matrix(p.bias);
  }
  std::string take() { return std::move(out_); }

 private:
  std::string out_;
};

class Reader {
 public:
  explicit Reader(std::string_view in) : in_(in) {}

  std::uint64_t raw(int bytes) {
    need(static_cast<std::size_t>(bytes));
    std::uint64_t v = 0;
    for (int i = 0; i < bytes; ++i)
      v |= static_cast<std::uint64_t>(static_cast<unsigned char>(in_[pos_ + i])) << (8 * i);
    pos_ += static_cast<std::size_t>(bytes);
    return v;
  }
  std::uint8_t u8() { return static_cast<std::uint8_t>(raw(1)); }
  std::uint32_t u32() { return static_cast<std::uint32_t>(raw(4)); }
  std::uint64_t u64() { return raw(8); }
  double f64() { return std::bit_cast<double>(u64()); }
  std::string str() {
    const std::uint64_t n = u64();
    need(n);
    std::string s(in_.substr(pos_, n));
    pos_ += n;
    return s;
  }
  std::vector<double> vec() {
    const std::uint64_t n = u64();
    need(n * 8);
    std::vector<double> v(n);
    for (auto& x : v) x = f64();
    return v;
  }
  Eigen::MatrixXd matrix(std::uint64_t rows, std::uint64_t cols, const char* what) {
    const std::uint64_t r = u64(), c = u64();
    if (r != rows || c != cols) {
      throw FormatError(std::string("checkpoint: ") + what + " has shape " +
                        std::to_string(r) + "x" + std::to_string(c) + ", expected " +
                        std::to_string(rows) + "x" + std::to_string(cols));
    }
    need(r * c * 8);
    Eigen::MatrixXd m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = f64();
    return m;
  }
  ModelParams params(std::uint64_t dim) {
    ModelParams p;
    p.embeddings = matrix(kVocabularySize, dim, "embeddings");
    p.w_left = matrix(dim, dim, "w_left");
    p.w_right = matrix(dim, dim, "w_right");
    p.bias = matrix(dim, 1, "bias");
    return p;
  }
  bool done() const { return pos_ == in_.size(); }

 private:
  void need(std::uint64_t n) const {
    if (n > in_.size() - pos_) throw FormatError("checkpoint: truncated data");
  }
  std::string_view in_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string encode_checkpoint(const Checkpoint& cp) {
  Writer w;
  for (char c : kMagic) w.u8(static_cast<std::uint8_t>(c));
  w.u32(kVersion);
  w.u64(cp.vocabulary);
  const Hyperparams& h = cp.hyper;
  w.u64(h.dim);
  w.f64(h.margin);
  w.f64(h.lambda);
  w.f64(h.learning_rate);
  w.f64(h.momentum);
  w.u64(h.epochs);
  w.u64(h.seed);
  w.u8(h.shuffle ? 1 : 0);
  w.u64(cp.epoch);
  w.str(cp.rng_state);
  w.vec(cp.mean_hinge);
  w.vec(cp.objective);
  w.params(cp.params);
  w.params(cp.velocity);
  return w.take();
}

Checkpoint decode_checkpoint(std::string_view bytes) {
  if (bytes.substr(0, kMagic.size()) != kMagic) throw FormatError("not a checkpoint file");
  Reader r(bytes.substr(kMagic.size()));
  const std::uint32_t version = r.u32();
  if (version != kVersion) {
    throw FormatError("checkpoint version " + std::to_string(version) + " is not supported (expected " +
                      std::to_string(kVersion) + ")");
  }
  Checkpoint cp;
  cp.vocabulary = r.u64();
  if (cp.vocabulary != vocabulary_fingerprint())
    throw FormatError("checkpoint was written for a different node-kind vocabulary");
  Hyperparams& h = cp.hyper;
  h.dim = r.u64();
  h.margin = r.f64();
  h.lambda = r.f64();
  h.learning_rate = r.f64();
  h.momentum = r.f64();
  h.epochs = r.u64();
  h.seed = r.u64();
  h.shuffle = r.u8() != 0;
  if (h.dim == 0 || h.dim > 4096) throw FormatError("checkpoint: implausible dimension");
  cp.epoch = r.u64();
  cp.rng_state = r.str();
  cp.mean_hinge = r.vec();
  cp.objective = r.vec();
  cp.params = r.params(h.dim);
  cp.velocity = r.params(h.dim);
  if (!r.done()) throw FormatError("checkpoint: trailing bytes");
  if (cp.mean_hinge.size() != cp.epoch || cp.objective.size() != cp.epoch)
    throw FormatError("checkpoint: loss history does not match epoch count");
  return cp;
}

void save_checkpoint(const Checkpoint& cp, const std::filesystem::path& path) {
  write_text_file(path, encode_checkpoint(cp));
}

Checkpoint load_checkpoint(const std::filesystem::path& path) {
  const std::string bytes = read_text_file(path);
  try {
    return decode_checkpoint(bytes);
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

}  // namespace astvec
