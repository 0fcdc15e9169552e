#include "dycktile/io.hpp"

#include <algorithm>
#include <sstream>

#include "dycktile/errors.hpp"

namespace dycktile::io {

json exact(const Rational& q) { return {{"exact", to_string(q)}}; }
json exact(const Integer& z) { return {{"exact", z.get_str()}}; }
json approx(const HighFloat& x, unsigned digits) { return {{"approx", to_string(x, digits)}, {"digits", digits}}; }

json qpoly(const QPoly& p) {
  json terms = json::object();
  for (const auto& [d, c] : p.doubled_terms()) {
    std::string key = d % 2 == 0 ? std::to_string(d / 2) : std::to_string(d) + "/2";
    terms[key] = c.get_str();
  }
  return {{"terms", terms}, {"text", p.str()}};
}

json path_labels(const DyckPath& h) {
  return {{"bpe", h.bpe()}, {"ud", h.ud()}, {"confining_set", dyck_to_confining(h).str()},
          {"pairing", dyck_to_pairing(h).str()}};
}

Format parse_format(const std::string& text) {
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  if (text == "ascii") return Format::Ascii;
  throw ValidationError("format must be json, csv or ascii");
}

namespace {

std::string row_label(const DyckPath& h, bool inverse) {
  return inverse ? dyck_to_pairing(h).str() : dyck_to_confining(h).str();
}

std::string col_label(const DyckPath& h, bool inverse) {
  return inverse ? dyck_to_confining(h).str() : dyck_to_pairing(h).str();
}

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

std::string render_matrix(const PathIndex& paths, const TriMatrix& m, bool inverse, Format format) {
  const int k = paths.size();
  std::ostringstream out;
  switch (format) {
    case Format::Json: {
      json rows = json::array(), cols = json::array(), entries = json::array();
      for (int i = 0; i < k; ++i) {
        rows.push_back(path_labels(paths[i]));
        cols.push_back(path_labels(paths[i]));
        json row = json::array();
        for (int j = 0; j < k; ++j) row.push_back(m.at(i, j).get_si());
        entries.push_back(row);
      }
      json doc = {{"n", paths.semilength()},
                  {"matrix", inverse ? "M^-1" : "M"},
                  {"row_label", inverse ? "pairing" : "confining_set"},
                  {"column_label", inverse ? "confining_set" : "pairing"},
                  {"rows", rows},
                  {"columns", cols},
                  {"entries", entries}};
      out << doc.dump(2) << "\n";
      break;
    }
    case Format::Csv: {
      out << csv_quote(inverse ? "pairing" : "confining_set") << "," << csv_quote("bpe");
      for (int j = 0; j < k; ++j) out << "," << csv_quote(paths[j].bpe() + " " + col_label(paths[j], inverse));
      out << "\n";
      for (int i = 0; i < k; ++i) {
        out << csv_quote(row_label(paths[i], inverse)) << "," << csv_quote(paths[i].bpe());
        for (int j = 0; j < k; ++j) out << "," << m.at(i, j).get_str();
        out << "\n";
      }
      break;
    }
    case Format::Ascii: {
      std::vector<std::string> labels;
      std::size_t lw = 0, cw = 3;
      for (int i = 0; i < k; ++i) {
        labels.push_back(row_label(paths[i], inverse) + "  " + paths[i].bpe());
        lw = std::max(lw, labels.back().size());
        for (int j = 0; j < k; ++j) cw = std::max(cw, m.at(i, j).get_str().size() + 1);
      }
      for (int j = 0; j < k; ++j) {
        cw = std::max(cw, std::to_string(j + 1).size() + 2);
        out << "c" << j + 1 << ": " << paths[j].bpe() << "  " << col_label(paths[j], inverse) << "\n";
      }
      out << std::string(lw + 2, ' ');
      for (int j = 0; j < k; ++j) {
        std::string h = "c" + std::to_string(j + 1);
        out << std::string(cw - h.size(), ' ') << h;
      }
      out << "\n";
      for (int i = 0; i < k; ++i) {
        out << labels[static_cast<std::size_t>(i)] << std::string(lw + 2 - labels[static_cast<std::size_t>(i)].size(), ' ');
        for (int j = 0; j < k; ++j) {
          std::string v = m.at(i, j).get_str();
          out << std::string(cw - v.size(), ' ') << v;
        }
        out << "\n";
      }
      break;
    }
  }
  return out.str();
}

json tiling_json(const SkewShape& shape, const DyckTiling& t) {
  json tiles = json::array();
  for (const DyckTile& tile : t.tiles)
    tiles.push_back({{"column", tile.column}, {"row", tile.row}, {"profile", tile.profile}, {"size", tile.size()}});
  return {{"tiles", tiles}, {"tile_count", t.tiles.size()}, {"ascii", render_ascii(shape, t)}};
}

}  // namespace dycktile::io
