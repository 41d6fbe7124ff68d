// Copyright 2026 The fdsec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fdsec/channel.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace fdsec {

double db_to_linear(double x_db) {
  if (!std::isfinite(x_db)) {
    throw std::invalid_argument("db_to_linear: non-finite input");
  }
  return std::pow(10.0, x_db / 10.0);
}

double linear_to_db(double x) {
  if (!(x >= 0.0) || !std::isfinite(x)) {
    throw std::invalid_argument("linear_to_db: input must be finite and >= 0");
  }
  if (x == 0.0) return -std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(x);
}

double sample_exponential(double mean, double u) {
  if (!(u > 0.0 && u < 1.0)) {
    throw std::invalid_argument("sample_exponential: u must lie in (0, 1)");
  }
  if (!(mean >= 0.0)) {
    throw std::invalid_argument("sample_exponential: mean must be >= 0");
  }
  if (mean == 0.0) return 0.0;
  return -mean * std::log(u);
}

LinkBudget LinkBudget::from_db(const LinkDb& db, int num_relays, ChannelMode mode) {
  LinkBudget b;
  b.db_ = db;
  b.sr_ = db_to_linear(db.sr);
  b.rd_ = db_to_linear(db.rd);
  b.se_ = db_to_linear(db.se);
  b.re_ = db_to_linear(db.re);
  b.rr_ = db_to_linear(db.rr);
  b.num_relays_ = num_relays;
  b.mode_ = mode;
  b.validate();
  return b;
}

LinkBudget LinkBudget::from_linear(double sr, double rd, double se, double re, double rr,
                                   int num_relays, ChannelMode mode) {
  LinkBudget b;
  b.sr_ = sr;
  b.rd_ = rd;
  b.se_ = se;
  b.re_ = re;
  b.rr_ = rr;
  b.num_relays_ = num_relays;
  b.mode_ = mode;
  b.validate();
  b.db_ = {linear_to_db(sr), linear_to_db(rd), linear_to_db(se), linear_to_db(re),
           linear_to_db(rr)};
  return b;
}

LinkBudget LinkBudget::with_num_relays(int num_relays) const {
  LinkBudget b = *this;
  b.num_relays_ = num_relays;
  b.validate();
  return b;
}

LinkBudget LinkBudget::with_mode(ChannelMode mode) const {
  LinkBudget b = *this;
  b.mode_ = mode;
  return b;
}

void LinkBudget::validate() const {
  for (double g : {sr_, rd_, se_, re_, rr_}) {
    if (!(g >= 0.0) || !std::isfinite(g)) {
      throw std::invalid_argument("LinkBudget: average SNRs must be finite and >= 0");
    }
  }
  if (num_relays_ < 1) {
    throw std::invalid_argument("LinkBudget: num_relays must be >= 1, got " +
                                std::to_string(num_relays_));
  }
}

std::size_t LinkBudget::uniforms_per_realization() const noexcept {
  return 5 + 4 * static_cast<std::size_t>(num_relays_ - 1);
}

namespace {

inline double draw(double mean, ChannelMode mode, RandomStream& stream) {
  const double u = stream.next_uniform();
  return mode == ChannelMode::kDeterministic ? mean : sample_exponential(mean, u);
}

}  // namespace

void sample_realization_into(const LinkBudget& budget, RandomStream& stream,
                             ChannelRealization& out) {
  const ChannelMode mode = budget.mode();
  out.relays.resize(static_cast<std::size_t>(budget.num_relays()));

  RelayLinks& first = out.relays[0];
  first.sr = draw(budget.gamma_sr_bar(), mode, stream);
  first.rd = draw(budget.gamma_rd_bar(), mode, stream);
  out.se = draw(budget.gamma_se_bar(), mode, stream);
  first.re = draw(budget.gamma_re_bar(), mode, stream);
  first.rr = draw(budget.gamma_rr_bar(), mode, stream);

  for (std::size_t i = 1; i < out.relays.size(); ++i) {
    RelayLinks& r = out.relays[i];
    r.sr = draw(budget.gamma_sr_bar(), mode, stream);
    r.rd = draw(budget.gamma_rd_bar(), mode, stream);
    r.re = draw(budget.gamma_re_bar(), mode, stream);
    r.rr = draw(budget.gamma_rr_bar(), mode, stream);
  }
}

ChannelRealization sample_realization(const LinkBudget& budget, RandomStream& stream) {
  ChannelRealization out;
  sample_realization_into(budget, stream, out);
  return out;
}

}  // namespace fdsec
