// Copyright 2026 The semgraph Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "semgraph/benchmark.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "semgraph/errors.hpp"

namespace semgraph {

namespace {

constexpr std::string_view kDatasetHeader = "id\titem1\titem2\treference\tpublished";

std::vector<std::string> split_tabs(const std::string &line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto tab = line.find('\t', start);
    out.push_back(line.substr(start, tab - start));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  return out;
}

std::optional<double> parse_real(const std::string &text) {
  if (text.empty()) return std::nullopt;
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception &) {
    return std::nullopt;
  }
  if (used != text.size() || !std::isfinite(v)) return std::nullopt;
  return v;
}

std::string trim(std::string s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

void check_stats_input(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw ContractError("xs and ys differ in length");
  if (xs.size() < 2) throw ContractError("need at least two points");
}

struct Moments {
  double mx = 0.0, my = 0.0, sxx = 0.0, syy = 0.0, sxy = 0.0;
};

Moments moments(std::span<const double> xs, std::span<const double> ys) {
  Moments m;
  const double n = static_cast<double>(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    m.mx += xs[i];
    m.my += ys[i];
  }
  m.mx /= n;
  m.my /= n;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - m.mx, dy = ys[i] - m.my;
    m.sxx += dx * dx;
    m.syy += dy * dy;
    m.sxy += dx * dy;
  }
  return m;
}

void finish_report(EvalReport &report) {
  std::vector<double> xs, ys;
  for (const auto &p : report.pairs) {
    if (p.excluded) {
      report.excluded_ids.push_back(p.id);
      continue;
    }
    xs.push_back(p.reference);
    ys.push_back(p.score);
  }
  report.pearson_r = pearson(xs, ys);
  report.fit = linear_fit(xs, ys);
}

}  // namespace

std::vector<BenchmarkPair> load_dataset(std::istream &in, const std::string &name) {
  std::vector<BenchmarkPair> out;
  std::set<int> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line_no == 1) {
      if (line != kDatasetHeader) throw DatasetError(name, 1, "unexpected header");
      continue;
    }
    if (line.empty()) continue;
    auto fields = split_tabs(line);
    if (fields.size() != 5) throw DatasetError(name, line_no, "expected 5 tab-separated fields");
    BenchmarkPair p;
    auto id = parse_real(trim(fields[0]));
    if (!id || *id != std::floor(*id)) throw DatasetError(name, line_no, "bad id");
    p.id = static_cast<int>(*id);
    p.item1 = trim(fields[1]);
    p.item2 = trim(fields[2]);
    if (p.item1.empty() || p.item2.empty()) throw DatasetError(name, line_no, "empty item");
    auto ref = parse_real(trim(fields[3]));
    if (!ref || *ref < 0.0 || *ref > 1.0)
      throw DatasetError(name, line_no, "reference must be a number in [0, 1]");
    p.reference = *ref;
    auto pub_text = trim(fields[4]);
    if (!pub_text.empty()) {
      p.published = parse_real(pub_text);
      if (!p.published) throw DatasetError(name, line_no, "bad published value");
    }
    if (!seen.insert(p.id).second) throw DatasetError(name, line_no, "duplicate id");
    out.push_back(std::move(p));
  }
  if (line_no == 0) throw DatasetError(name, 1, "empty file");
  return out;
}

std::vector<BenchmarkPair> load_dataset(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError(path.string(), LoadError::kNoOffset, "cannot open file");
  return load_dataset(in, path.string());
}

double pearson(std::span<const double> xs, std::span<const double> ys) {
  check_stats_input(xs, ys);
  auto m = moments(xs, ys);
  if (m.sxx == 0.0 || m.syy == 0.0) throw ContractError("zero variance");
  return std::clamp(m.sxy / std::sqrt(m.sxx * m.syy), -1.0, 1.0);
}

LinearFit linear_fit(std::span<const double> xs, std::span<const double> ys) {
  check_stats_input(xs, ys);
  auto m = moments(xs, ys);
  if (m.sxx == 0.0 || m.syy == 0.0) throw ContractError("zero variance");
  LinearFit fit;
  fit.slope = m.sxy / m.sxx;
  fit.intercept = m.my - fit.slope * m.mx;
  if (xs.size() > 2) {
    const double sse = std::max(0.0, m.syy - fit.slope * m.sxy);
    fit.stderr_slope = std::sqrt(sse / static_cast<double>(xs.size() - 2) / m.sxx);
  }
  return fit;
}

std::size_t EvalReport::included() const {
  return static_cast<std::size_t>(
      std::count_if(pairs.begin(), pairs.end(), [](const auto &p) { return !p.excluded; }));
}

void EvalReport::print_table(std::ostream &out) const {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%4s  %-14s %-14s %9s %9s %9s  %s\n", "id", "item1", "item2",
                "reference", "score", "published", "note");
  out << buf;
  for (const auto &p : pairs) {
    auto shorten = [](const std::string &s) { return s.size() > 14 ? s.substr(0, 11) + "..." : s; };
    std::string pub = p.published ? std::to_string(*p.published) : "-";
    std::string note = p.note;
    if (p.excluded) note = note.empty() ? "excluded" : "excluded, " + note;
    std::snprintf(buf, sizeof buf, "%4d  %-14s %-14s %9.4f %9.4f %9s  %s\n", p.id,
                  shorten(p.item1).c_str(), shorten(p.item2).c_str(), p.reference, p.score,
                  pub.substr(0, 9).c_str(), note.c_str());
    out << buf;
  }
  std::snprintf(buf, sizeof buf,
                "pairs %zu (included %zu)  r = %.6f  slope = %.6f  intercept = %.6f  stderr = %.6f\n",
                pairs.size(), included(), pearson_r, fit.slope, fit.intercept, fit.stderr_slope);
  out << buf;
}

std::string EvalReport::to_json(int indent) const {
  nlohmann::json j;
  j["kind"] = kind;
  j["pairs"] = nlohmann::json::array();
  for (const auto &p : pairs) {
    nlohmann::json e{{"id", p.id},          {"item1", p.item1},       {"item2", p.item2},
                     {"reference", p.reference}, {"score", p.score}, {"excluded", p.excluded}};
    e["published"] = p.published ? nlohmann::json(*p.published) : nlohmann::json(nullptr);
    if (!p.note.empty()) e["note"] = p.note;
    j["pairs"].push_back(std::move(e));
  }
  j["pearson_r"] = pearson_r;
  j["slope"] = fit.slope;
  j["intercept"] = fit.intercept;
  j["stderr"] = fit.stderr_slope;
  j["excluded_ids"] = excluded_ids;
  return j.dump(indent);
}

EvalReport run_word_benchmark(std::span<const BenchmarkPair> dataset, const PathCache &cache,
                              const SimilarityParams &params) {
  params.validate();
  EvalReport report;
  report.kind = "word";
  const auto &index = cache.index();
  for (const auto &pair : dataset) {
    PairResult r{pair.id, pair.item1, pair.item2, pair.reference, pair.published, 0.0, false, {}};
    const auto w1 = normalize_lemma(pair.item1);
    const auto w2 = normalize_lemma(pair.item2);
    if (!index.has_lemma(w1, PosCategory::Noun) || !index.has_lemma(w2, PosCategory::Noun))
      r.note = "oov";
    else
      r.score = word_similarity(w1, w2, PosCategory::Noun, PosCategory::Noun, cache, params);
    report.pairs.push_back(std::move(r));
  }
  finish_report(report);
  return report;
}

EvalReport run_sentence_benchmark(std::span<const BenchmarkPair> dataset,
                                  const SentenceComparator &comparator,
                                  const std::set<int> &exclusions, unsigned threads) {
  EvalReport report;
  report.kind = "sentence";
  report.pairs.resize(dataset.size());
  auto score_one = [&](std::size_t i) {
    const auto &pair = dataset[i];
    PairResult r{pair.id, pair.item1, pair.item2, pair.reference, pair.published, 0.0, false, {}};
    r.excluded = exclusions.contains(pair.id);
    try {
      r.score = comparator.similarity(pair.item1, pair.item2);
    } catch (const DegenerateInputError &e) {
      r.note = e.what();
    }
    report.pairs[i] = std::move(r);
  };
  if (threads <= 1 || dataset.size() < 2) {
    for (std::size_t i = 0; i < dataset.size(); ++i) score_one(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(threads);
    {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
          try {
            for (std::size_t i = next++; i < dataset.size(); i = next++) score_one(i);
          } catch (...) {
            errors[t] = std::current_exception();
          }
        });
    }
    for (auto &e : errors)
      if (e) std::rethrow_exception(e);
  }
  finish_report(report);
  return report;
}

}  // namespace semgraph
