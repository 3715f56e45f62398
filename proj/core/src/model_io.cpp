// Copyright 2026 the hslr authors
// SPDX-License-Identifier: Apache-2.0

#include "hslr/model_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include "hslr/errors.hpp"
#include "hslr/half.hpp"
#include "wire.hpp"

namespace hslr {

namespace {

constexpr char kMagic[4] = {'H', 'S', 'L', 'M'};
constexpr std::uint32_t kVersion = 1;
constexpr std::uint64_t kMaxElements = 1ull << 33;

void put_value(std::ostream& out, float v, Dtype dtype) {
  if (dtype == Dtype::F32) {
    wire::put_f32(out, v);
  } else {
    wire::put_u16(out, float_to_half(v));
  }
}

float get_value(std::istream& in, Dtype dtype) {
  return dtype == Dtype::F32 ? wire::get_f32(in) : half_to_float(wire::get_u16(in));
}

void put_matrix(std::ostream& out, const DenseMatrix& m, Dtype dtype) {
  wire::put_u64(out, m.rows());
  wire::put_u64(out, m.cols());
  for (float v : m.values()) put_value(out, v, dtype);
}

DenseMatrix get_matrix(std::istream& in, Dtype dtype) {
  const std::uint64_t rows = wire::get_u64(in);
  const std::uint64_t cols = wire::get_u64(in);
  if (cols != 0 && rows > kMaxElements / cols) {
    throw CorruptFileError("matrix dimensions are implausibly large");
  }
  const std::size_t count = static_cast<std::size_t>(rows * cols);
  std::vector<float> values(count);
  for (std::size_t i = 0; i < count; ++i) values[i] = get_value(in, dtype);
  DenseMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols),
                std::move(values));
  require_finite(m, "model matrix");
  return m;
}

void put_factor(std::ostream& out, const LowRankFactor& f, Dtype dtype) {
  put_matrix(out, f.u, dtype);
  put_matrix(out, f.r, dtype);
}

LowRankFactor get_factor(std::istream& in, Dtype dtype) {
  LowRankFactor f;
  f.u = get_matrix(in, dtype);
  f.r = get_matrix(in, dtype);
  if (f.u.cols() != f.r.rows()) {
    throw CorruptFileError("factor inner dimensions disagree");
  }
  return f;
}

void put_sparse(std::ostream& out, const SparseMatrix& s, Dtype dtype) {
  wire::put_u64(out, s.rows());
  wire::put_u64(out, s.cols());
  wire::put_u64(out, s.nnz());
  for (const SparseEntry& e : s.entries()) {
    wire::put_u32(out, e.row);
    wire::put_u32(out, e.col);
    put_value(out, e.value, dtype);
  }
}

SparseMatrix get_sparse(std::istream& in, Dtype dtype) {
  const std::uint64_t rows = wire::get_u64(in);
  const std::uint64_t cols = wire::get_u64(in);
  const std::uint64_t nnz = wire::get_u64(in);
  if (nnz > kMaxElements) {
    throw CorruptFileError("sparse entry count is implausibly large");
  }
  std::vector<SparseEntry> entries;
  entries.reserve(static_cast<std::size_t>(nnz));
  for (std::uint64_t i = 0; i < nnz; ++i) {
    SparseEntry e;
    e.row = wire::get_u32(in);
    e.col = wire::get_u32(in);
    e.value = get_value(in, dtype);
    entries.push_back(e);
  }
  try {
    return SparseMatrix::from_entries(static_cast<std::size_t>(rows),
                                      static_cast<std::size_t>(cols),
                                      std::move(entries));
  } catch (const DataError& e) {
    throw CorruptFileError(std::string("bad sparse block: ") + e.what());
  }
}

void put_perm(std::ostream& out, const Permutation& p) {
  wire::put_u64(out, p.size());
  for (std::uint32_t v : p.forward()) wire::put_u32(out, v);
}

Permutation get_perm(std::istream& in) {
  const std::uint64_t n = wire::get_u64(in);
  if (n > kMaxElements) {
    throw CorruptFileError("permutation length is implausibly large");
  }
  std::vector<std::uint32_t> forward(static_cast<std::size_t>(n));
  for (auto& v : forward) v = wire::get_u32(in);
  try {
    return Permutation::from_forward(std::move(forward));
  } catch (const DataError& e) {
    throw CorruptFileError(std::string("bad permutation: ") + e.what());
  }
}

void put_node(std::ostream& out, const ShssNode& node, Dtype dtype) {
  if (node.is_leaf()) {
    wire::put_u8(out, 0);
    put_matrix(out, node.dense, dtype);
    return;
  }
  wire::put_u8(out, 1);
  wire::put_u64(out, node.dim);
  wire::put_u64(out, node.split);
  wire::put_u64(out, node.rank_at_level);
  wire::put_u64(out, node.depth);
  put_sparse(out, node.spikes, dtype);
  wire::put_u8(out, node.perm ? 1 : 0);
  if (node.perm) put_perm(out, *node.perm);
  put_factor(out, node.off01, dtype);
  put_factor(out, node.off10, dtype);
  put_node(out, *node.child0, dtype);
  put_node(out, *node.child1, dtype);
}

ShssNode get_node(std::istream& in, Dtype dtype) {
  ShssNode node;
  const std::uint8_t tag = wire::get_u8(in);
  if (tag == 0) {
    node.dense = get_matrix(in, dtype);
    if (!node.dense.is_square()) {
      throw CorruptFileError("leaf blocks must be square");
    }
    node.dim = node.dense.rows();
    return node;
  }
  if (tag != 1) {
    throw CorruptFileError("unknown node tag " + std::to_string(tag));
  }
  node.dim = static_cast<std::size_t>(wire::get_u64(in));
  node.split = static_cast<std::size_t>(wire::get_u64(in));
  node.rank_at_level = static_cast<std::size_t>(wire::get_u64(in));
  node.depth = static_cast<std::size_t>(wire::get_u64(in));
  if (node.split == 0 || node.split >= node.dim) {
    throw CorruptFileError("node split outside its dimension");
  }
  node.spikes = get_sparse(in, dtype);
  if (node.spikes.rows() != node.dim || node.spikes.cols() != node.dim) {
    throw CorruptFileError("spike block shape does not match its node");
  }
  if (wire::get_u8(in) != 0) {
    node.perm = get_perm(in);
    if (node.perm->size() != node.dim) {
      throw CorruptFileError("permutation length does not match its node");
    }
  }
  node.off01 = get_factor(in, dtype);
  node.off10 = get_factor(in, dtype);
  const std::size_t lower = node.dim - node.split;
  if (node.off01.out_rows() != node.split || node.off01.in_cols() != lower ||
      node.off10.out_rows() != lower || node.off10.in_cols() != node.split) {
    throw CorruptFileError("off-diagonal factor shapes do not match the split");
  }
  node.child0 = std::make_unique<ShssNode>(get_node(in, dtype));
  node.child1 = std::make_unique<ShssNode>(get_node(in, dtype));
  if (node.child0->dim != node.split || node.child1->dim != lower) {
    throw CorruptFileError("child dimensions do not match the split");
  }
  return node;
}

void put_params(std::ostream& out, const ModelParams& p) {
  wire::put_f64(out, p.p);
  wire::put_u64(out, p.rank);
  wire::put_u64(out, p.depth);
  wire::put_u64(out, p.oversample);
  wire::put_u64(out, p.power_iters);
  wire::put_f32(out, p.eps);
  wire::put_u64(out, p.seed.value);
  wire::put_u8(out, static_cast<std::uint8_t>(p.spike_rule));
  wire::put_f32(out, p.spike_threshold);
}

ModelParams get_params(std::istream& in) {
  ModelParams p;
  p.p = wire::get_f64(in);
  p.rank = static_cast<std::size_t>(wire::get_u64(in));
  p.depth = static_cast<std::size_t>(wire::get_u64(in));
  p.oversample = static_cast<std::size_t>(wire::get_u64(in));
  p.power_iters = static_cast<std::size_t>(wire::get_u64(in));
  p.eps = wire::get_f32(in);
  p.seed.value = wire::get_u64(in);
  const std::uint8_t rule = wire::get_u8(in);
  if (rule > 1) {
    throw CorruptFileError("unknown spike rule code " + std::to_string(rule));
  }
  p.spike_rule = static_cast<SpikeRule>(rule);
  p.spike_threshold = wire::get_f32(in);
  if (!std::isfinite(p.p) || !std::isfinite(p.eps) ||
      !std::isfinite(p.spike_threshold)) {
    throw CorruptFileError("non-finite model parameters");
  }
  return p;
}

} // namespace

void write_model_stream(const Model& m, std::ostream& out, Dtype dtype) {
  wire::put_bytes(out, kMagic, 4);
  wire::put_u32(out, kVersion);
  wire::put_u32(out, static_cast<std::uint32_t>(dtype));
  wire::put_u32(out, static_cast<std::uint32_t>(m.method));
  wire::put_u64(out, m.rows);
  wire::put_u64(out, m.cols);
  put_params(out, m.params);
  if (const auto* f = std::get_if<LowRankFactor>(&m.payload)) {
    put_factor(out, *f, dtype);
  } else if (const auto* slr = std::get_if<SparseLowRank>(&m.payload)) {
    put_sparse(out, slr->spikes, dtype);
    put_factor(out, slr->factor, dtype);
  } else {
    put_node(out, std::get<ShssModel>(m.payload).root, dtype);
  }
}

Model read_model_stream(std::istream& in) {
  char magic[4];
  wire::get_bytes(in, magic, 4);
  if (!std::equal(magic, magic + 4, kMagic)) {
    throw FormatError("bad magic; not an HSLM model file");
  }
  const std::uint32_t version = wire::get_u32(in);
  if (version != kVersion) {
    throw FormatError("unsupported HSLM version " + std::to_string(version));
  }
  const std::uint32_t dtype_code = wire::get_u32(in);
  if (dtype_code > 1) {
    throw FormatError("unknown dtype code " + std::to_string(dtype_code));
  }
  const Dtype dtype = static_cast<Dtype>(dtype_code);
  const std::uint32_t method_code = wire::get_u32(in);
  if (method_code > static_cast<std::uint32_t>(Method::ShssRcm)) {
    throw FormatError("unknown method code " + std::to_string(method_code));
  }

  Model model;
  model.method = static_cast<Method>(method_code);
  model.rows = static_cast<std::size_t>(wire::get_u64(in));
  model.cols = static_cast<std::size_t>(wire::get_u64(in));
  if (model.rows == 0 || model.cols == 0) {
    throw CorruptFileError("model dimensions must be positive");
  }
  model.params = get_params(in);

  switch (model.method) {
    case Method::Svd:
    case Method::Rsvd: {
      LowRankFactor f = get_factor(in, dtype);
      if (f.out_rows() != model.rows || f.in_cols() != model.cols) {
        throw CorruptFileError("factor shape does not match the model header");
      }
      model.payload = std::move(f);
      break;
    }
    case Method::Ssvd:
    case Method::Srsvd: {
      SparseLowRank slr;
      slr.spikes = get_sparse(in, dtype);
      slr.factor = get_factor(in, dtype);
      if (slr.spikes.rows() != model.rows || slr.spikes.cols() != model.cols ||
          slr.factor.out_rows() != model.rows ||
          slr.factor.in_cols() != model.cols) {
        throw CorruptFileError("payload shape does not match the model header");
      }
      slr.method =
          model.method == Method::Ssvd ? SlrMethod::Ssvd : SlrMethod::Srsvd;
      slr.params = SlrParams{model.params.p,           model.params.rank,
                             model.params.oversample,  model.params.power_iters,
                             model.params.eps,         model.params.seed};
      model.payload = std::move(slr);
      break;
    }
    case Method::Shss:
    case Method::ShssRcm: {
      if (model.rows != model.cols) {
        throw CorruptFileError("hierarchical models must be square");
      }
      ShssModel shss;
      shss.root = get_node(in, dtype);
      if (shss.root.dim != model.rows) {
        throw CorruptFileError("tree dimension does not match the model header");
      }
      shss.dim = model.rows;
      shss.config.p = model.params.p;
      shss.config.spike_threshold = model.params.spike_threshold;
      shss.config.spike_rule = model.params.spike_rule;
      shss.config.k = model.params.rank;
      shss.config.depth = model.params.depth;
      shss.config.eps = model.params.eps;
      shss.config.use_rcm = model.method == Method::ShssRcm;
      shss.config.method = FactorMethod::Rsvd;
      shss.config.oversample = model.params.oversample;
      shss.config.power_iters = model.params.power_iters;
      shss.config.seed = model.params.seed;
      model.payload = std::move(shss);
      break;
    }
  }
  return model;
}

void save_model(const Model& m, const std::filesystem::path& path, Dtype dtype) {
  std::ostringstream buffer(std::ios::binary);
  write_model_stream(m, buffer, dtype);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot open " + path.string() + " for writing");
  }
  const std::string bytes = buffer.str();
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  out.flush();
  if (!out) {
    throw IoError("write to " + path.string() + " failed");
  }
}

Model load_model(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open " + path.string() + " for reading");
  }
  Model m = read_model_stream(in);
  if (in.peek() != std::char_traits<char>::eof()) {
    throw CorruptFileError("trailing bytes after the model payload");
  }
  return m;
}

} // namespace hslr
