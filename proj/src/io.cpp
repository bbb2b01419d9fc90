#include "kohn/io.hpp"

#include <sstream>
#include <stdexcept>

#include "kohn/integer.hpp"

namespace kohn::io {
namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (char ch : line) {
    if (ch == '"') {
      quoted = !quoted;
    } else if (ch == sep && !quoted) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

int to_int(const std::string& s) {
  std::size_t used = 0;
  int v = std::stoi(s, &used);
  if (used != s.size()) throw std::invalid_argument("bad integer field: " + s);
  return v;
}

long to_long(const std::string& s) {
  std::size_t used = 0;
  long v = std::stol(s, &used);
  if (used != s.size()) throw std::invalid_argument("bad integer field: " + s);
  return v;
}

std::string weights_cell(const lens::LensSpace& L) {
  std::string out = "[";
  for (int i = 0; i < L.n(); ++i) out += (i ? "," : "") + std::to_string(L.weights()[i]);
  return out + "]";
}

}  // namespace

std::string dim_table_to_csv(const harmonic::DimTable& T) {
  std::ostringstream out;
  out << "p\\q";
  for (int q = 0; q <= T.qmax(); ++q) out << ',' << q;
  out << '\n';
  for (int p = 0; p <= T.pmax(); ++p) {
    out << p;
    for (int q = 0; q <= T.qmax(); ++q) out << ',' << T.at(p, q);
    out << '\n';
  }
  return out.str();
}

harmonic::DimTable dim_table_from_csv(const std::string& text, const std::string& descriptor, int n) {
  const auto rows = lines_of(text);
  if (rows.empty()) throw std::invalid_argument("empty DimTable CSV");
  const auto header = split(rows[0], ',');
  if (header.empty() || header[0] != "p\\q") throw std::invalid_argument("DimTable CSV header must start with p\\q");
  const int qmax = static_cast<int>(header.size()) - 2;
  const int pmax = static_cast<int>(rows.size()) - 2;
  if (qmax < 0 || pmax < 0) throw std::invalid_argument("DimTable CSV has no entries");
  for (int q = 0; q <= qmax; ++q)
    if (to_int(header[q + 1]) != q) throw std::invalid_argument("DimTable CSV header columns out of order");
  harmonic::DimTable T(descriptor, n, pmax, qmax);
  for (int p = 0; p <= pmax; ++p) {
    const auto cells = split(rows[p + 1], ',');
    if (static_cast<int>(cells.size()) != qmax + 2 || to_int(cells[0]) != p)
      throw std::invalid_argument("malformed DimTable CSV row " + std::to_string(p));
    for (int q = 0; q <= qmax; ++q) T.at(p, q) = parse_integer(cells[q + 1]);
  }
  return T;
}

json dim_table_to_json(const harmonic::DimTable& T) {
  json rows = json::array();
  for (int p = 0; p <= T.pmax(); ++p) {
    json row = json::array();
    for (int q = 0; q <= T.qmax(); ++q) row.push_back(to_decimal(T.at(p, q)));
    rows.push_back(std::move(row));
  }
  return {{"descriptor", T.descriptor()}, {"n", T.n()}, {"pmax", T.pmax()}, {"qmax", T.qmax()}, {"table", rows}};
}

harmonic::DimTable dim_table_from_json(const json& j) {
  harmonic::DimTable T(j.at("descriptor").get<std::string>(), j.at("n").get<int>(), j.at("pmax").get<int>(),
                       j.at("qmax").get<int>());
  const auto& rows = j.at("table");
  if (rows.size() != static_cast<std::size_t>(T.pmax() + 1)) throw std::invalid_argument("DimTable JSON row count");
  for (int p = 0; p <= T.pmax(); ++p) {
    const auto& row = rows.at(p);
    if (row.size() != static_cast<std::size_t>(T.qmax() + 1)) throw std::invalid_argument("DimTable JSON row length");
    for (int q = 0; q <= T.qmax(); ++q) T.at(p, q) = parse_integer(row.at(q).get<std::string>());
  }
  return T;
}

json poly_to_json(const genfun::BivariatePoly& P) {
  json out = json::array();
  for (const auto& [key, c] : P.terms()) out.push_back(json::array({key.first, key.second, to_decimal(c)}));
  return out;
}

genfun::BivariatePoly poly_from_json(const json& j) {
  genfun::BivariatePoly P;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3) throw std::invalid_argument("polynomial term must be [alpha, beta, a]");
    P.add(t.at(0).get<int>(), t.at(1).get<int>(), parse_integer(t.at(2).get<std::string>()));
  }
  return P;
}

json family_to_json(const search::IsospectralFamily& f) {
  json members = json::array();
  for (const auto& L : f.members) members.push_back(L.weights());
  return {{"n", f.n}, {"k", f.k}, {"members", members}};
}

search::IsospectralFamily family_from_json(const json& j) {
  search::IsospectralFamily f{j.at("n").get<int>(), j.at("k").get<long>(), {}, {}};
  for (const auto& m : j.at("members")) {
    lens::LensSpace L(f.k, m.get<std::vector<long>>());
    if (L.n() != f.n) throw std::invalid_argument("family member has the wrong dimension");
    f.members.push_back(std::move(L));
  }
  return f;
}

std::string families_to_jsonl(const std::vector<search::IsospectralFamily>& families) {
  std::string out;
  for (const auto& f : families) out += family_to_json(f).dump() + "\n";
  return out;
}

std::vector<search::IsospectralFamily> families_from_jsonl(const std::string& text) {
  std::vector<search::IsospectralFamily> out;
  for (const auto& line : lines_of(text)) out.push_back(family_from_json(json::parse(line)));
  return out;
}

std::string families_csv_header() { return "2n-1,k,family\n"; }

std::string families_to_csv_rows(const std::vector<search::IsospectralFamily>& families) {
  std::ostringstream out;
  for (const auto& f : families) {
    out << 2 * f.n - 1 << ',' << f.k << ",\"";
    for (std::size_t i = 0; i < f.members.size(); ++i) out << (i ? " " : "") << weights_cell(f.members[i]);
    out << "\"\n";
  }
  return out.str();
}

std::string berger_to_csv(const std::vector<berger::BergerLine>& lines) {
  std::ostringstream out;
  out << "c_s,c_r,multiplicity,bidegrees\n";
  for (const auto& line : lines) {
    out << line.c_s << ',' << line.c_r << ',' << line.multiplicity << ",\"";
    for (std::size_t i = 0; i < line.provenance.size(); ++i)
      out << (i ? " " : "") << '(' << line.provenance[i].first << ';' << line.provenance[i].second << ')';
    out << "\"\n";
  }
  return out.str();
}

std::vector<berger::BergerLine> berger_from_csv(const std::string& text) {
  const auto rows = lines_of(text);
  if (rows.empty() || rows[0] != "c_s,c_r,multiplicity,bidegrees") throw std::invalid_argument("bad Berger CSV header");
  std::vector<berger::BergerLine> out;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto cells = split(rows[r], ',');
    if (cells.size() != 4) throw std::invalid_argument("malformed Berger CSV row");
    berger::BergerLine line{to_long(cells[0]), to_long(cells[1]), parse_integer(cells[2]), {}};
    std::istringstream bid(cells[3]);
    std::string tok;
    while (bid >> tok) {
      if (tok.size() < 5 || tok.front() != '(' || tok.back() != ')') throw std::invalid_argument("bad bidegree " + tok);
      const auto parts = split(tok.substr(1, tok.size() - 2), ';');
      if (parts.size() != 2) throw std::invalid_argument("bad bidegree " + tok);
      line.provenance.emplace_back(to_int(parts[0]), to_int(parts[1]));
    }
    out.push_back(std::move(line));
  }
  return out;
}

json berger_to_json(const std::vector<berger::BergerLine>& lines) {
  json out = json::array();
  for (const auto& line : lines) {
    json bid = json::array();
    for (const auto& [p, q] : line.provenance) bid.push_back(json::array({p, q}));
    out.push_back({{"c_s", line.c_s}, {"c_r", line.c_r}, {"multiplicity", to_decimal(line.multiplicity)},
                   {"bidegrees", bid}});
  }
  return out;
}

}  // namespace kohn::io
