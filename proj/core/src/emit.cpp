#include "troute/emit.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "troute/error.hpp"

namespace troute {

std::string format_number(double v) {
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

namespace {

std::string meta_text(const MetaValue& v) {
  if (const auto* s = std::get_if<std::string>(&v)) return *s;
  return format_number(std::get<double>(v));
}

std::string fixed3(double v) {
  std::array<char, 32> buf{};
  std::snprintf(buf.data(), buf.size(), "%.3f", v);
  return buf.data();
}

std::string axis_label(const std::string& x_name) {
  return x_name == "E" ? "E / xi" : "omega_A / xi";
}

}  // namespace

std::string to_csv(const SweepTable& table) {
  std::string out;
  for (const auto& [key, value] : table.metadata) {
    out += "# " + key + " = " + meta_text(value) + "\n";
  }
  out += table.x_name;
  for (const auto& c : table.columns) out += "," + c;
  out += ",unitarity_residual\n";
  for (std::size_t r = 0; r < table.rows(); ++r) {
    out += format_number(table.x[r]);
    for (const auto& col : table.values) out += "," + format_number(col[r]);
    out += "," + format_number(table.unitarity_residual[r]) + "\n";
  }
  return out;
}

std::string to_json(const SweepTable& table) {
  nlohmann::ordered_json doc;
  auto& meta = doc["metadata"];
  meta = nlohmann::ordered_json::object();
  for (const auto& [key, value] : table.metadata) {
    if (const auto* s = std::get_if<std::string>(&value)) {
      meta[key] = *s;
    } else {
      meta[key] = std::get<double>(value);
    }
  }
  auto& cols = doc["columns"];
  cols[table.x_name] = table.x;
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    cols[table.columns[c]] = table.values[c];
  }
  cols["unitarity_residual"] = table.unitarity_residual;
  return doc.dump(2) + "\n";
}

std::string to_svg(const SweepTable& table) {
  constexpr double kWidth = 640, kHeight = 400;
  constexpr double kLeft = 70, kRight = 20, kTop = 20, kBottom = 50;
  constexpr std::array<const char*, 6> kColors = {"#1f77b4", "#d62728", "#2ca02c",
                                                   "#000000", "#9467bd", "#ff7f0e"};
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;

  double x_lo = 0.0, x_hi = 1.0;
  if (!table.x.empty()) {
    x_lo = table.x.front();
    x_hi = table.x.back();
  }
  if (!(x_hi > x_lo)) x_hi = x_lo + 1.0;
  double y_hi = 1.0;
  for (const auto& col : table.values) {
    for (double v : col) y_hi = std::max(y_hi, v);
  }
  const auto px = [&](double x) { return kLeft + (x - x_lo) / (x_hi - x_lo) * plot_w; };
  const auto py = [&](double y) { return kTop + (1.0 - y / y_hi) * plot_h; };

  std::string generator = "troute";
  for (const auto& [key, value] : table.metadata) {
    if (key == "generator") generator = meta_text(value);
  }

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kWidth
     << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight
     << "\">\n"
     << "<!-- generator: " << generator << " -->\n"
     << "<rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\"" << kHeight
     << "\" fill=\"white\"/>\n";

  // Axes and ticks.
  os << "<g stroke=\"black\" stroke-width=\"1\" fill=\"none\">\n"
     << "<line x1=\"" << kLeft << "\" y1=\"" << kTop + plot_h << "\" x2=\""
     << kLeft + plot_w << "\" y2=\"" << kTop + plot_h << "\"/>\n"
     << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft
     << "\" y2=\"" << kTop + plot_h << "\"/>\n"
     << "</g>\n";
  os << "<g font-family=\"sans-serif\" font-size=\"11\" fill=\"black\">\n";
  for (int i = 0; i <= 4; ++i) {
    const double xv = x_lo + (x_hi - x_lo) * i / 4.0;
    const double yv = y_hi * i / 4.0;
    os << "<text x=\"" << fixed3(px(xv)) << "\" y=\"" << fixed3(kTop + plot_h + 16)
       << "\" text-anchor=\"middle\">" << fixed3(xv) << "</text>\n";
    os << "<text x=\"" << fixed3(kLeft - 6) << "\" y=\"" << fixed3(py(yv) + 4)
       << "\" text-anchor=\"end\">" << fixed3(yv) << "</text>\n";
  }
  os << "<text x=\"" << fixed3(kLeft + plot_w / 2) << "\" y=\"" << fixed3(kHeight - 10)
     << "\" text-anchor=\"middle\">" << axis_label(table.x_name) << "</text>\n";
  os << "<text x=\"16\" y=\"" << fixed3(kTop + plot_h / 2)
     << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 " << fixed3(kTop + plot_h / 2)
     << ")\">probability</text>\n";
  os << "</g>\n";

  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    const char* color = kColors[c % kColors.size()];
    os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t r = 0; r < table.rows(); ++r) {
      if (r) os << ' ';
      os << fixed3(px(table.x[r])) << ',' << fixed3(py(table.values[c][r]));
    }
    os << "\"/>\n";
    os << "<text x=\"" << fixed3(kLeft + plot_w - 90) << "\" y=\"" << fixed3(kTop + 14 + 14 * c)
       << "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"" << color << "\">"
       << table.columns[c] << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string render(const SweepTable& table, Format format) {
  switch (format) {
    case Format::CSV: return to_csv(table);
    case Format::JSON: return to_json(table);
    case Format::SVG: return to_svg(table);
  }
  return {};
}

void emit(const SweepTable& table, Format format, const std::filesystem::path& path) {
  const std::string text = render(table, format);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(ErrorCode::IoFailure, "cannot open '" + path.string() + "' for writing");
  }
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.close();
  if (!out) {
    throw Error(ErrorCode::IoFailure, "failed writing '" + path.string() + "'");
  }
}

Format format_from_path(const std::filesystem::path& path) {
  const std::string ext = path.extension().string();
  if (ext == ".csv") return Format::CSV;
  if (ext == ".json") return Format::JSON;
  if (ext == ".svg") return Format::SVG;
  throw Error(ErrorCode::InvalidParams,
              "cannot infer output format from '" + path.string() + "'");
}

namespace {

double parse_double(std::string_view s) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw Error(ErrorCode::InvalidParams, "bad number '" + std::string(s) + "' in CSV");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    parts.push_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace

SweepTable parse_csv(std::string_view text) {
  SweepTable table;
  bool have_header = false;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    if (line.empty()) continue;
    if (line.front() == '#') {
      const std::size_t eq = line.find(" = ");
      if (eq != std::string_view::npos && line.size() > 2) {
        table.metadata.emplace_back(std::string(line.substr(2, eq - 2)),
                                    std::string(line.substr(eq + 3)));
      }
      continue;
    }
    const auto cells = split(line, ',');
    if (!have_header) {
      if (cells.size() < 2 || cells.back() != "unitarity_residual") {
        throw Error(ErrorCode::InvalidParams, "CSV column header not recognised");
      }
      table.x_name = std::string(cells.front());
      for (std::size_t i = 1; i + 1 < cells.size(); ++i) table.columns.emplace_back(cells[i]);
      table.values.resize(table.columns.size());
      have_header = true;
      continue;
    }
    if (cells.size() != table.columns.size() + 2) {
      throw Error(ErrorCode::InvalidParams, "CSV row has the wrong number of cells");
    }
    table.x.push_back(parse_double(cells.front()));
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      table.values[c].push_back(parse_double(cells[c + 1]));
    }
    table.unitarity_residual.push_back(parse_double(cells.back()));
  }
  if (!have_header) {
    throw Error(ErrorCode::InvalidParams, "CSV has no column header");
  }
  return table;
}

}  // namespace troute
