#include "io.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace ue {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(line);
  while (std::getline(is, cur, ',')) {
    // trim surrounding whitespace
    const auto a = cur.find_first_not_of(" \t\r");
    const auto b = cur.find_last_not_of(" \t\r");
    out.push_back(a == std::string::npos ? "" : cur.substr(a, b - a + 1));
  }
  return out;
}

bool is_number(const std::string& s) {
  if (s.empty()) return false;
  char* end = nullptr;
  std::strtod(s.c_str(), &end);
  return end == s.c_str() + s.size();
}

}  // namespace

FiniteMetricSpace matrix_from_csv(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  std::vector<std::vector<std::string>> rows;
  while (std::getline(is, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    rows.push_back(split_csv_line(line));
  }
  if (rows.empty()) throw Error(ErrorCode::Io, "empty CSV matrix");
  std::vector<std::string> labels;
  std::size_t first = 0;
  if (!rows[0].empty() && !is_number(rows[0][0])) {
    labels = rows[0];
    first = 1;
  }
  const std::size_t n = rows.size() - first;
  if (n == 0) throw Error(ErrorCode::Io, "CSV matrix has no data rows");
  std::vector<double> d(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[first + i].size() != n)
      throw Error(ErrorCode::Io, "CSV matrix is not square");
    for (std::size_t j = 0; j < n; ++j) {
      if (!is_number(rows[first + i][j]))
        throw Error(ErrorCode::Io, "CSV matrix has a non-numeric entry");
      d[i * n + j] = std::strtod(rows[first + i][j].c_str(), nullptr);
    }
  }
  if (!labels.empty() && labels.size() != n)
    throw Error(ErrorCode::Io, "CSV header width does not match matrix");
  return FiniteMetricSpace(n, std::move(d), std::move(labels));
}

std::string matrix_to_csv(const FiniteMetricSpace& m, bool header) {
  std::ostringstream os;
  os.precision(17);
  if (header && !m.labels().empty()) {
    for (std::size_t j = 0; j < m.size(); ++j)
      os << (j ? "," : "") << m.labels()[j];
    os << "\n";
  }
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) os << (j ? "," : "") << m(i, j);
    os << "\n";
  }
  return os.str();
}

FiniteMetricSpace matrix_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::BadJson, std::string("bad matrix JSON: ") + e.what());
  }
  const std::size_t n = j.at("n").get<std::size_t>();
  const auto upper = j.at("d").get<std::vector<double>>();
  if (upper.size() != n * (n - 1) / 2)
    throw Error(ErrorCode::BadJson, "upper triangle length mismatch");
  std::vector<double> d(n * n, 0.0);
  std::size_t t = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = i + 1; k < n; ++k, ++t) {
      d[i * n + k] = upper[t];
      d[k * n + i] = upper[t];
    }
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
  return FiniteMetricSpace(n, std::move(d), std::move(labels));
}

std::string matrix_to_json(const FiniteMetricSpace& m) {
  ordered_json j;
  j["n"] = m.size();
  std::vector<double> upper;
  upper.reserve(m.size() * (m.size() - 1) / 2);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t k = i + 1; k < m.size(); ++k) upper.push_back(m(i, k));
  j["d"] = upper;
  if (!m.labels().empty()) j["labels"] = m.labels();
  return j.dump();
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::Io, "cannot open " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::Io, "cannot write " + path);
  f << content;
}

ordered_json cert_to_json(const std::vector<CertEntry>& cert) {
  ordered_json arr = ordered_json::array();
  for (const auto& c : cert) {
    ordered_json e;
    e["kind"] = c.kind;
    e["lhs"] = c.lhs;
    e["rhs"] = c.rhs;
    e["margin"] = c.margin;
    e["i"] = c.i;
    e["j"] = c.j;
    arr.push_back(e);
  }
  return arr;
}

std::vector<CertEntry> cert_from_json(const ordered_json& j) {
  std::vector<CertEntry> cert;
  for (const auto& e : j) {
    CertEntry c;
    c.kind = e.at("kind").get<std::string>();
    c.lhs = e.at("lhs").get<double>();
    c.rhs = e.at("rhs").get<double>();
    c.margin = e.at("margin").get<double>();
    c.i = e.at("i").get<std::size_t>();
    c.j = e.at("j").get<std::size_t>();
    cert.push_back(std::move(c));
  }
  return cert;
}

ordered_json extraction_to_json(const ExtractionResult& r) {
  ordered_json j;
  j["case"] = to_string(r.label);
  j["attempted"] = to_string(r.attempted);
  j["indices"] = r.indices;
  ordered_json p;
  p["theta"] = r.params.theta;
  p["delta"] = r.params.delta;
  p["alpha"] = r.params.alpha;
  p["c1"] = r.params.c1;
  p["c2"] = r.params.c2;
  p["bin_width"] = r.params.bin_width;
  p["bins"] = r.params.bins;
  p["radii"] = r.params.radii;
  j["params"] = p;
  j["certificate"] = cert_to_json(r.certificate);
  return j;
}

ExtractionResult extraction_from_json(const ordered_json& j) {
  ExtractionResult r;
  r.label = case_from_string(j.at("case").get<std::string>());
  r.attempted = case_from_string(j.at("attempted").get<std::string>());
  r.indices = j.at("indices").get<std::vector<std::size_t>>();
  const auto& p = j.at("params");
  r.params.theta = p.at("theta").get<double>();
  r.params.delta = p.at("delta").get<double>();
  r.params.alpha = p.at("alpha").get<double>();
  r.params.c1 = p.at("c1").get<double>();
  r.params.c2 = p.at("c2").get<double>();
  r.params.bin_width = p.at("bin_width").get<double>();
  r.params.bins = p.at("bins").get<std::size_t>();
  r.params.radii = p.at("radii").get<std::vector<double>>();
  r.certificate = cert_from_json(j.at("certificate"));
  return r;
}

ordered_json embedding_to_json(const EmbeddingReport& r) {
  ordered_json j;
  j["scale"] = r.dist.scale;
  j["distortion"] = r.dist.distortion;
  j["case"] = to_string(r.label);
  j["mode"] = r.block_mode ? "block" : "singleton";
  j["bound"] = r.bound;
  j["global_scale"] = r.global_scale;
  j["image"] = r.image;
  j["worst_lower"] = {{"i", r.image[r.dist.worst_lower.i]},
                      {"j", r.image[r.dist.worst_lower.j]},
                      {"ratio", r.dist.worst_lower.ratio}};
  j["worst_upper"] = {{"i", r.image[r.dist.worst_upper.i]},
                      {"j", r.image[r.dist.worst_upper.j]},
                      {"ratio", r.dist.worst_upper.ratio}};
  ordered_json pairs = ordered_json::array();
  for (const auto& p : r.pairs) {
    ordered_json e;
    e["i"] = p.i;
    e["j"] = p.j;
    e["d"] = p.d;
    e["rho"] = p.rho;
    e["ratio"] = p.ratio;
    pairs.push_back(e);
  }
  j["pairs"] = pairs;
  j["certificate"] = cert_to_json(r.certificate);
  return j;
}

std::string coordinates_to_csv(const CoordinateEmbedding& emb) {
  std::ostringstream os;
  os.precision(17);
  for (std::size_t i = 0; i < emb.n; ++i) {
    for (std::size_t c = 0; c < emb.dim; ++c)
      os << (c ? "," : "") << emb.coords[i * emb.dim + c];
    if (emb.dim == 0) os << 0.0;
    os << "\n";
  }
  return os.str();
}

}  // namespace ue
