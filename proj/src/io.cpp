#include "netalign/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace netalign {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' ||
                                 line[pos] == '\r')) {
      pos++;
    }
    size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t' &&
           line[end] != '\r') {
      end++;
    }
    if (end > pos) out.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return out;
}

[[noreturn]] void fail(const std::filesystem::path& path, int line,
                       const std::string& what) {
  throw ParseError(path.string() + ":" + std::to_string(line) + ": " + what);
}

int parse_int(std::string_view field, const std::filesystem::path& path,
              int line) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(),
                                   value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    fail(path, line, "expected an integer, got '" + std::string(field) + "'");
  }
  return value;
}

double parse_double(std::string_view field, const std::filesystem::path& path,
                    int line) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(),
                                   value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    fail(path, line, "expected a number, got '" + std::string(field) + "'");
  }
  return value;
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  return in;
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path.string());
  return out;
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

SmatData read_smat(const std::filesystem::path& path) {
  std::ifstream in = open_input(path);
  std::string line;
  int lineno = 0;

  if (!std::getline(in, line)) fail(path, 1, "missing header");
  lineno = 1;
  auto header = split_fields(line);
  if (header.size() != 3) fail(path, 1, "header must be 'rows cols nnz'");
  SmatData data;
  data.rows = parse_int(header[0], path, 1);
  data.cols = parse_int(header[1], path, 1);
  const int nnz = parse_int(header[2], path, 1);
  if (data.rows < 0 || data.cols < 0 || nnz < 0) {
    fail(path, 1, "header values must be nonnegative");
  }

  data.triplets.reserve(nnz);
  while (static_cast<int>(data.triplets.size()) < nnz) {
    if (!std::getline(in, line)) {
      fail(path, lineno, "expected " + std::to_string(nnz) + " triplets, got " +
                             std::to_string(data.triplets.size()));
    }
    lineno++;
    auto fields = split_fields(line);
    if (fields.empty()) continue;  // blank line between triplets is tolerated
    if (fields.size() != 3) fail(path, lineno, "expected 'row col value'");
    SmatData::Triplet t;
    t.row = parse_int(fields[0], path, lineno);
    t.col = parse_int(fields[1], path, lineno);
    t.value = parse_double(fields[2], path, lineno);
    if (t.row < 0 || t.row >= data.rows || t.col < 0 || t.col >= data.cols) {
      fail(path, lineno, "index out of bounds");
    }
    data.triplets.push_back(t);
  }
  while (std::getline(in, line)) {
    lineno++;
    if (!split_fields(line).empty()) fail(path, lineno, "extra data after nnz triplets");
  }
  return data;
}

void write_smat(const std::filesystem::path& path, const SmatData& data) {
  std::ofstream out = open_output(path);
  out << data.rows << ' ' << data.cols << ' ' << data.triplets.size() << '\n';
  for (const auto& t : data.triplets) {
    out << t.row << ' ' << t.col << ' ' << format_double(t.value) << '\n';
  }
  if (!out) throw ParseError("write failed for " + path.string());
}

std::vector<int> read_edge_index_file(const std::filesystem::path& path) {
  std::ifstream in = open_input(path);
  std::vector<int> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    lineno++;
    auto fields = split_fields(line);
    if (fields.empty() || fields[0][0] == '#') continue;
    if (fields.size() != 1) fail(path, lineno, "expected one edge index per line");
    out.push_back(parse_int(fields[0], path, lineno));
  }
  return out;
}

void write_edge_index_file(const std::filesystem::path& path,
                           std::span<const int> edges) {
  std::ofstream out = open_output(path);
  out << "# candidate-edge indices into L under the canonical order "
         "(ascending by A endpoint, then B endpoint)\n";
  for (int e : edges) out << e << '\n';
  if (!out) throw ParseError("write failed for " + path.string());
}

namespace {

SimpleGraph graph_from_smat(const SmatData& data, GraphSymmetry symmetry,
                            const std::filesystem::path& path) {
  if (data.rows != data.cols) {
    throw ParseError(path.string() + ": graph file must be square");
  }
  std::vector<std::pair<int, int>> edges;
  if (symmetry == GraphSymmetry::kTriangular) {
    for (const auto& t : data.triplets) edges.emplace_back(t.row, t.col);
  } else {
    // Expect every edge in both orientations.
    std::vector<std::pair<int, int>> directed;
    for (const auto& t : data.triplets) directed.emplace_back(t.row, t.col);
    std::sort(directed.begin(), directed.end());
    for (const auto& [u, v] : directed) {
      if (u < v) edges.emplace_back(u, v);
      if (!std::binary_search(directed.begin(), directed.end(),
                              std::pair(v, u))) {
        throw ParseError(path.string() + ": missing mirrored entry for (" +
                         std::to_string(u) + "," + std::to_string(v) + ")");
      }
    }
  }
  return SimpleGraph::from_edges(data.rows, std::move(edges));
}

}  // namespace

InstanceBundle read_bundle(const std::filesystem::path& manifest_path) {
  std::ifstream in = open_input(manifest_path);
  nlohmann::json manifest;
  try {
    in >> manifest;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(manifest_path.string() + ": " + e.what());
  }
  const auto dir = manifest_path.parent_path();
  auto file_of = [&](const char* key) -> std::filesystem::path {
    if (!manifest.contains(key) || !manifest[key].is_string()) {
      throw ParseError(manifest_path.string() + ": manifest needs a '" +
                       std::string(key) + "' entry");
    }
    return dir / manifest[key].get<std::string>();
  };

  GraphSymmetry symmetry = GraphSymmetry::kTriangular;
  if (manifest.contains("graph_symmetry")) {
    const std::string s = manifest["graph_symmetry"].get<std::string>();
    if (s == "full") {
      symmetry = GraphSymmetry::kFull;
    } else if (s != "triangular") {
      throw ParseError(manifest_path.string() +
                       ": graph_symmetry must be 'triangular' or 'full'");
    }
  }

  SimpleGraph a = graph_from_smat(read_smat(file_of("a_graph")), symmetry,
                                  file_of("a_graph"));
  SimpleGraph b = graph_from_smat(read_smat(file_of("b_graph")), symmetry,
                                  file_of("b_graph"));

  const auto l_path = file_of("l_graph");
  SmatData l_data = read_smat(l_path);
  std::vector<CandidateEdge> l_edges;
  l_edges.reserve(l_data.triplets.size());
  for (const auto& t : l_data.triplets) l_edges.push_back({t.row, t.col, t.value});
  CandidateGraph l =
      CandidateGraph::from_edges(l_data.rows, l_data.cols, std::move(l_edges));

  InstanceBundle bundle;
  bundle.instance =
      ProblemInstance::build(std::move(a), std::move(b), std::move(l));
  if (manifest.contains("truth")) {
    const auto truth_path = file_of("truth");
    auto truth = read_edge_index_file(truth_path);
    for (int e : truth) {
      if (e < 0 || e >= bundle.instance.edge_count()) {
        throw ParseError(truth_path.string() + ": edge index " +
                         std::to_string(e) + " out of range");
      }
    }
    bundle.truth = std::move(truth);
  }
  return bundle;
}

void write_bundle(const std::filesystem::path& dir,
                  const ProblemInstance& inst, const std::vector<int>* truth,
                  GraphSymmetry symmetry) {
  std::filesystem::create_directories(dir);

  auto graph_smat = [&](const SimpleGraph& g) {
    SmatData data;
    data.rows = data.cols = g.vertex_count();
    for (const auto& [u, v] : g.edges()) {
      data.triplets.push_back({u, v, 1.0});
      if (symmetry == GraphSymmetry::kFull) data.triplets.push_back({v, u, 1.0});
    }
    if (symmetry == GraphSymmetry::kFull) {
      std::sort(data.triplets.begin(), data.triplets.end(),
                [](const auto& x, const auto& y) {
                  return std::pair(x.row, x.col) < std::pair(y.row, y.col);
                });
    }
    return data;
  };
  write_smat(dir / "A.smat", graph_smat(inst.a));
  write_smat(dir / "B.smat", graph_smat(inst.b));

  SmatData l_data;
  l_data.rows = inst.l.rows();
  l_data.cols = inst.l.cols();
  for (int e = 0; e < inst.edge_count(); ++e) {
    l_data.triplets.push_back({inst.l.head(e), inst.l.tail(e), inst.l.weight(e)});
  }
  write_smat(dir / "L.smat", l_data);

  nlohmann::json manifest;
  manifest["a_graph"] = "A.smat";
  manifest["b_graph"] = "B.smat";
  manifest["l_graph"] = "L.smat";
  manifest["graph_symmetry"] =
      symmetry == GraphSymmetry::kFull ? "full" : "triangular";
  if (truth) {
    write_edge_index_file(dir / "truth.txt", *truth);
    manifest["truth"] = "truth.txt";
  }
  std::ofstream out = open_output(dir / "bundle.json");
  out << manifest.dump(2) << '\n';
}

void write_trace_csv(const SolveReport& report,
                     const std::filesystem::path& path) {
  std::ofstream out = open_output(path);
  out << "iteration,lower_bound,upper_bound,weight,overlap,residual,recovery\n";
  auto field = [](double x) {
    return x == x ? format_double(x) : std::string();
  };
  for (const auto& rec : report.iterations) {
    out << rec.iteration << ',' << field(rec.lower) << ',' << field(rec.upper)
        << ',' << field(rec.weight) << ',' << field(rec.overlaps) << ','
        << field(rec.residual) << ',' << field(rec.recovery) << '\n';
  }
  if (!out) throw ParseError("write failed for " + path.string());
}

}  // namespace netalign
