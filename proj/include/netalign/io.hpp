#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "netalign/instance.hpp"
#include "netalign/solution.hpp"

namespace netalign {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Sparse triplet text format: a "rows cols nnz" header line followed by
// exactly nnz "row col value" lines, zero-based indices.
struct SmatData {
  int rows = 0;
  int cols = 0;
  struct Triplet {
    int row = 0;
    int col = 0;
    double value = 0.0;
  };
  std::vector<Triplet> triplets;
};

SmatData read_smat(const std::filesystem::path& path);
void write_smat(const std::filesystem::path& path, const SmatData& data);

// How the symmetric graph files of a bundle store each undirected edge.
enum class GraphSymmetry { kTriangular, kFull };

struct InstanceBundle {
  ProblemInstance instance;
  std::optional<std::vector<int>> truth;
};

// A bundle is a JSON manifest naming the A-graph, B-graph and L files
// (paths relative to the manifest) plus an optional truth file.
InstanceBundle read_bundle(const std::filesystem::path& manifest_path);
void write_bundle(const std::filesystem::path& dir,
                  const ProblemInstance& inst,
                  const std::vector<int>* truth = nullptr,
                  GraphSymmetry symmetry = GraphSymmetry::kTriangular);

// Truth and solution files share one format: one canonical edge index per
// line, '#' comment lines ignored.
std::vector<int> read_edge_index_file(const std::filesystem::path& path);
void write_edge_index_file(const std::filesystem::path& path,
                           std::span<const int> edges);

// Per-iteration trace with the fixed column set
// iteration,lower_bound,upper_bound,weight,overlap,residual,recovery;
// absent values print as empty fields.
void write_trace_csv(const SolveReport& report,
                     const std::filesystem::path& path);

// 17 significant digits, enough to round-trip doubles.
std::string format_double(double x);

}  // namespace netalign
