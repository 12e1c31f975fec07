#pragma once

// Locale-independent CSV serialization for signals and analysis tables.
// Doubles are written with enough digits to round-trip bitwise and parsed
// with std::from_chars, so files are identical across machines and locales.

#include <charconv>
#include <complex>
#include <cstddef>
#include <istream>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "signal.hpp"
#include "signature.hpp"

namespace wavesig {

namespace detail {

inline std::string format_real(double value) {
  char buffer[64];
  const auto result =
      std::to_chars(buffer, buffer + sizeof(buffer), value, std::chars_format::general, 17);
  if (result.ec != std::errc()) throw std::runtime_error("format_real: conversion failed");
  return std::string(buffer, result.ptr);
}

inline double parse_real(std::string_view text, const char* what) {
  double value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  while (first != last && (*first == ' ' || *first == '\t')) ++first;
  const auto result = std::from_chars(first, last, value);
  if (result.ec != std::errc() || result.ptr != last) {
    throw std::runtime_error(std::string(what) + ": cannot parse number '" + std::string(text) +
                             "'");
  }
  return value;
}

inline long parse_integer(std::string_view text, const char* what) {
  long value = 0;
  const auto result = std::from_chars(text.data(), text.data() + text.size(), value);
  if (result.ec != std::errc() || result.ptr != text.data() + text.size()) {
    throw std::runtime_error(std::string(what) + ": cannot parse integer '" + std::string(text) +
                             "'");
  }
  return value;
}

inline std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

inline std::string_view strip_carriage_return(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

// Reads "# key=value" comment lines into meta until the first non-comment
// line, which is returned (header line) without consuming anything after it.
inline std::string read_meta_block(std::istream& in, std::map<std::string, std::string>& meta) {
  std::string line;
  while (std::getline(in, line)) {
    std::string_view view = strip_carriage_return(line);
    if (view.empty()) continue;
    if (view.front() != '#') return std::string(view);
    view.remove_prefix(1);
    while (!view.empty() && view.front() == ' ') view.remove_prefix(1);
    const std::size_t eq = view.find('=');
    if (eq == std::string_view::npos) continue;  // free-form comment
    meta.emplace(std::string(view.substr(0, eq)), std::string(view.substr(eq + 1)));
  }
  return {};
}

}  // namespace detail

// ---- Signal CSV: "# key=value" comments, header "x,f", one row per sample.

template <class Real>
void write_signal_csv(std::ostream& out, const BasicSignal<Real>& f) {
  validate_signal(f);
  if (!f.label.empty()) out << "# label=" << f.label << "\n";
  out << "# n=" << f.size() << "\n";
  out << "x,f\n";
  const std::size_t n = f.size();
  for (std::size_t m = 0; m < n; ++m) {
    out << detail::format_real(double(m) / double(n)) << ','
        << detail::format_real(double(f.samples[m])) << "\n";
  }
  if (!out) throw std::runtime_error("write_signal_csv: stream failure");
}

template <class Real = double>
BasicSignal<Real> read_signal_csv(std::istream& in) {
  std::map<std::string, std::string> meta;
  const std::string header = detail::read_meta_block(in, meta);
  if (header != "x,f") {
    throw std::runtime_error("read_signal_csv: expected header 'x,f', got '" + header + "'");
  }
  BasicSignal<Real> f;
  if (auto it = meta.find("label"); it != meta.end()) f.label = it->second;
  std::string line;
  while (std::getline(in, line)) {
    const std::string_view view = detail::strip_carriage_return(line);
    if (view.empty()) continue;
    const auto fields = detail::split_fields(view);
    if (fields.size() != 2) throw std::runtime_error("read_signal_csv: malformed row");
    f.samples.push_back(Real(detail::parse_real(fields[1], "read_signal_csv")));
  }
  validate_signal(f);
  return f;
}

// ---- Analysis table: per-position signature summary plus the run settings.

template <class Real = double>
struct BasicAnalysisConfig {
  std::size_t n = 1024;
  Real base_scale = Real(0.125);
  int voices_per_octave = 3;
  int scale_count = 16;
  Real tau = Real(default_detection_threshold);
  int smoothness_order = 1;
  Real dilation = Real(1);
  int nms_window = 0;  // 0 = suppression off
  std::string signal_label;
};
using AnalysisConfig = BasicAnalysisConfig<double>;

template <class Real = double>
struct BasicAnalysisRow {
  Real b = Real(0);
  std::complex<Real> w{};
  Real abs_w = Real(0);
  Real rho = Real(0);
  std::complex<Real> sigma{};
  Real arg_sigma = Real(0);
  std::string label;  // empty when nothing was detected at b
};
using AnalysisRow = BasicAnalysisRow<double>;

template <class Real = double>
struct BasicAnalysisTable {
  BasicAnalysisConfig<Real> config;
  std::vector<BasicAnalysisRow<Real>> rows;
};
using AnalysisTable = BasicAnalysisTable<double>;

template <class Real>
BasicAnalysisTable<Real> make_analysis_table(const BasicSignatureField<Real>& signature,
                                             const BasicAnalysisConfig<Real>& config) {
  const std::size_t n = signature.w_mean.size();
  if (config.n != n) {
    throw std::invalid_argument("make_analysis_table: config length does not match field");
  }
  BasicAnalysisTable<Real> table;
  table.config = config;
  table.rows.resize(n);
  for (std::size_t b = 0; b < n; ++b) {
    auto& row = table.rows[b];
    row.b = Real(b) / Real(n);
    row.w = signature.w_mean[b];
    row.abs_w = signature.abs_w[b];
    row.rho = signature.rho[b];
    row.sigma = signature.sigma[b];
    row.arg_sigma = signature.arg_sigma[b];
    if (signature.sigma[b] != std::complex<Real>(0, 0)) {
      row.label = to_string(symmetry_label(signature.sigma[b]).label);
    }
  }
  return table;
}

inline constexpr const char* analysis_header = "b,re_w,im_w,abs_w,rho,sig_re,sig_im,arg_sig,label";

template <class Real>
void write_analysis_csv(std::ostream& out, const BasicAnalysisTable<Real>& table) {
  const auto& c = table.config;
  out << "# label=" << c.signal_label << "\n";
  out << "# n=" << c.n << "\n";
  out << "# base_scale=" << detail::format_real(double(c.base_scale)) << "\n";
  out << "# voices_per_octave=" << c.voices_per_octave << "\n";
  out << "# scale_count=" << c.scale_count << "\n";
  out << "# tau=" << detail::format_real(double(c.tau)) << "\n";
  out << "# smoothness_order=" << c.smoothness_order << "\n";
  out << "# dilation=" << detail::format_real(double(c.dilation)) << "\n";
  out << "# nms_window=" << c.nms_window << "\n";
  out << analysis_header << "\n";
  for (const auto& row : table.rows) {
    out << detail::format_real(double(row.b)) << ',' << detail::format_real(double(row.w.real()))
        << ',' << detail::format_real(double(row.w.imag())) << ','
        << detail::format_real(double(row.abs_w)) << ',' << detail::format_real(double(row.rho))
        << ',' << detail::format_real(double(row.sigma.real())) << ','
        << detail::format_real(double(row.sigma.imag())) << ','
        << detail::format_real(double(row.arg_sigma)) << ',' << row.label << "\n";
  }
  if (!out) throw std::runtime_error("write_analysis_csv: stream failure");
}

template <class Real = double>
BasicAnalysisTable<Real> read_analysis_csv(std::istream& in) {
  std::map<std::string, std::string> meta;
  const std::string header = detail::read_meta_block(in, meta);
  if (header != analysis_header) {
    throw std::runtime_error("read_analysis_csv: unexpected header '" + header + "'");
  }
  BasicAnalysisTable<Real> table;
  auto require = [&meta](const char* key) -> const std::string& {
    const auto it = meta.find(key);
    if (it == meta.end()) {
      throw std::runtime_error(std::string("read_analysis_csv: missing meta key '") + key + "'");
    }
    return it->second;
  };
  table.config.signal_label = require("label");
  table.config.n = static_cast<std::size_t>(detail::parse_integer(require("n"), "n"));
  table.config.base_scale = Real(detail::parse_real(require("base_scale"), "base_scale"));
  table.config.voices_per_octave =
      static_cast<int>(detail::parse_integer(require("voices_per_octave"), "voices_per_octave"));
  table.config.scale_count =
      static_cast<int>(detail::parse_integer(require("scale_count"), "scale_count"));
  table.config.tau = Real(detail::parse_real(require("tau"), "tau"));
  table.config.smoothness_order =
      static_cast<int>(detail::parse_integer(require("smoothness_order"), "smoothness_order"));
  table.config.dilation = Real(detail::parse_real(require("dilation"), "dilation"));
  table.config.nms_window =
      static_cast<int>(detail::parse_integer(require("nms_window"), "nms_window"));

  std::string line;
  while (std::getline(in, line)) {
    const std::string_view view = detail::strip_carriage_return(line);
    if (view.empty()) continue;
    const auto fields = detail::split_fields(view);
    if (fields.size() != 9) throw std::runtime_error("read_analysis_csv: malformed row");
    BasicAnalysisRow<Real> row;
    row.b = Real(detail::parse_real(fields[0], "b"));
    row.w = {Real(detail::parse_real(fields[1], "re_w")),
             Real(detail::parse_real(fields[2], "im_w"))};
    row.abs_w = Real(detail::parse_real(fields[3], "abs_w"));
    row.rho = Real(detail::parse_real(fields[4], "rho"));
    row.sigma = {Real(detail::parse_real(fields[5], "sig_re")),
                 Real(detail::parse_real(fields[6], "sig_im"))};
    row.arg_sigma = Real(detail::parse_real(fields[7], "arg_sig"));
    row.label = std::string(fields[8]);
    table.rows.push_back(std::move(row));
  }
  if (table.rows.size() != table.config.n) {
    throw std::runtime_error("read_analysis_csv: row count does not match meta n");
  }
  return table;
}

}  // namespace wavesig
