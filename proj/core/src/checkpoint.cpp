// Copyright 2026 The quga Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "quga/checkpoint.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <string>

#include "quga/errors.hpp"

namespace quga {
namespace {

constexpr std::array<char, 8> kMlpMagic{'Q', 'U', 'G', 'A', 'M', 'L', 'P', '1'};
constexpr std::array<char, 8> kQuantumMagic{'Q', 'U', 'G', 'A', 'Q', 'P', 'V', '1'};
constexpr std::uint64_t kMaxCount = std::uint64_t{1} << 32;

class Writer {
  public:
    explicit Writer(const std::filesystem::path &path)
        : out_(path, std::ios::binary | std::ios::trunc), path_(path) {
        if (!out_) throw std::runtime_error("cannot open " + path.string() + " for writing");
    }
    void magic(const std::array<char, 8> &m) { out_.write(m.data(), m.size()); }
    void u64(std::uint64_t v) {
        std::array<char, 8> bytes{};
        for (std::size_t i = 0; i < 8; ++i) {
            bytes[i] = static_cast<char>((v >> (8 * i)) & 0xFFU);
        }
        out_.write(bytes.data(), bytes.size());
    }
    void f64(double v) { u64(std::bit_cast<std::uint64_t>(v)); }
    void finish() {
        out_.flush();
        if (!out_) throw std::runtime_error("write failed: " + path_.string());
    }

  private:
    std::ofstream out_;
    std::filesystem::path path_;
};

class Reader {
  public:
    explicit Reader(const std::filesystem::path &path)
        : in_(path, std::ios::binary), path_(path) {
        if (!in_) throw ParseError("cannot open checkpoint " + path.string());
    }
    void expect_magic(const std::array<char, 8> &m) {
        std::array<char, 8> got{};
        read(got.data(), got.size());
        if (got != m) throw ParseError(path_.string() + ": bad checkpoint magic");
    }
    std::uint64_t u64() {
        std::array<unsigned char, 8> bytes{};
        read(reinterpret_cast<char *>(bytes.data()), bytes.size());
        std::uint64_t v = 0;
        for (std::size_t i = 0; i < 8; ++i) v |= std::uint64_t{bytes[i]} << (8 * i);
        return v;
    }
    double f64() { return std::bit_cast<double>(u64()); }
    std::uint64_t count() {
        const auto n = u64();
        if (n > kMaxCount) throw ParseError(path_.string() + ": implausible element count");
        return n;
    }

  private:
    void read(char *dst, std::size_t n) {
        in_.read(dst, static_cast<std::streamsize>(n));
        if (in_.gcount() != static_cast<std::streamsize>(n)) {
            throw ParseError(path_.string() + ": truncated checkpoint");
        }
    }
    std::ifstream in_;
    std::filesystem::path path_;
};

Activation activation_from(std::uint64_t v) {
    if (v > static_cast<std::uint64_t>(Activation::Sigmoid)) {
        throw ParseError("unknown activation tag " + std::to_string(v));
    }
    return static_cast<Activation>(v);
}

}  // namespace

void save_mlp(const std::filesystem::path &path, const Mlp &model) {
    Writer w(path);
    w.magic(kMlpMagic);
    w.u64(model.layer_sizes().size());
    for (auto s : model.layer_sizes()) w.u64(s);
    w.u64(static_cast<std::uint64_t>(model.hidden_activation()));
    w.u64(static_cast<std::uint64_t>(model.output_activation()));
    w.f64(model.leaky_slope());
    w.u64(model.param_count());
    for (double p : model.params()) w.f64(p);
    w.finish();
}

Mlp load_mlp(const std::filesystem::path &path) {
    Reader r(path);
    r.expect_magic(kMlpMagic);
    std::vector<std::size_t> sizes(r.count());
    for (auto &s : sizes) s = r.count();
    const Activation hidden = activation_from(r.u64());
    const Activation output = activation_from(r.u64());
    const double slope = r.f64();
    Mlp model(std::move(sizes), hidden, output, slope);
    const auto n = r.count();
    if (n != model.param_count()) {
        throw ParseError(path.string() + ": parameter count does not match layer sizes");
    }
    for (double &p : model.params()) p = r.f64();
    return model;
}

void save_quantum_params(const std::filesystem::path &path,
                         const QuantumCheckpoint &checkpoint) {
    if (checkpoint.params.size() != param_count(checkpoint.spec)) {
        throw ArgumentError("quantum checkpoint parameter count mismatch");
    }
    Writer w(path);
    w.magic(kQuantumMagic);
    w.u64(static_cast<std::uint64_t>(checkpoint.spec.family));
    w.u64(static_cast<std::uint64_t>(checkpoint.axis));
    w.u64(checkpoint.spec.layers);
    w.u64(checkpoint.spec.n_qubits);
    w.u64(checkpoint.params.size());
    for (double p : checkpoint.params) w.f64(p);
    w.finish();
}

QuantumCheckpoint load_quantum_params(const std::filesystem::path &path) {
    Reader r(path);
    r.expect_magic(kQuantumMagic);
    QuantumCheckpoint ck;
    const auto family = r.u64();
    const auto axis = r.u64();
    if (family > 1 || axis > 1) throw ParseError(path.string() + ": unknown ansatz tags");
    ck.spec.family = static_cast<AnsatzFamily>(family);
    ck.axis = static_cast<EmbeddingAxis>(axis);
    ck.spec.layers = r.count();
    ck.spec.n_qubits = r.count();
    ck.params.resize(r.count());
    if (ck.params.size() != param_count(ck.spec)) {
        throw ParseError(path.string() + ": parameter count does not match ansatz");
    }
    for (double &p : ck.params) p = r.f64();
    return ck;
}

}  // namespace quga
