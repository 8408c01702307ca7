#ifndef SPEXLAB_IO_HPP
#define SPEXLAB_IO_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "spexlab/graph.hpp"

namespace spexlab {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// graph6: N(n) followed by the upper-triangular adjacency bits x(0,1),
/// x(0,2), x(1,2), x(0,3), ... packed six per byte, each byte offset by 63.
/// N(n) is one byte for n <= 62 and '~' plus three bytes for n <= 258047.
std::string encode_graph6(const Graph& g);
Graph decode_graph6(std::string_view text);

/// Edge list text: "n m" then m lines "u v" (0-based, u < v, ascending).
std::string encode_edgelist(const Graph& g);
Graph decode_edgelist(std::string_view text);

/// Reads one graph from a stream, detecting edge-list text by a leading
/// line of two integers; otherwise the first non-empty line is graph6.
Graph read_graph(std::istream& in);

/// Every non-empty line parsed as graph6.
std::vector<Graph> read_graph6_stream(std::istream& in);

}  // namespace spexlab

#endif  // SPEXLAB_IO_HPP
