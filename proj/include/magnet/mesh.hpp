#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace magnet {

enum class ElementType { tri3, quad4 };

std::string_view to_string(ElementType type);
ElementType element_type_from_string(std::string_view name);
int nodes_per_element(ElementType type);

// Finite element mesh. Elements are stored flat with nodes_per_element()
// entries each; quad4 nodes are ordered counter-clockwise.
struct Mesh {
  int dim = 2;
  ElementType elem_type = ElementType::quad4;
  std::vector<double> coords;      // num_nodes() x dim, row-major
  std::vector<std::int32_t> conn;  // num_elements() x nodes_per_element

  std::size_t num_nodes() const { return dim > 0 ? coords.size() / dim : 0; }
  std::size_t num_elements() const { return conn.size() / nodes_per_element(elem_type); }
  std::size_t num_dofs() const { return num_nodes() * dim; }

  double x(std::size_t node) const { return coords[node * dim]; }
  double y(std::size_t node) const { return coords[node * dim + 1]; }

  std::span<const std::int32_t> element(std::size_t e) const;
};

// Throws StructuralError naming the first violated invariant: index range,
// repeated node within an element, orphan nodes.
void validate(const Mesh &mesh);

// Text format, 0-based indices:
//   dim N E elem_type
//   N lines of coordinates
//   E lines of element node indices
// Throws ParseError with the offending line number.
Mesh read_mesh(std::istream &in);
Mesh read_mesh_file(const std::string &path);
void write_mesh(std::ostream &out, const Mesh &mesh);
void write_mesh_file(const std::string &path, const Mesh &mesh);

// 64-bit FNV-1a over dim, element type, coordinate bits and connectivity.
std::uint64_t mesh_digest(const Mesh &mesh);

std::string digest_hex(std::uint64_t digest);
std::uint64_t digest_from_hex(std::string_view hex);

// Incremental FNV-1a used by all artifact digests.
class Fnv1a {
public:
  void bytes(const void *data, std::size_t size);
  template <class T> void value(const T &v) { bytes(&v, sizeof(T)); }
  std::uint64_t digest() const { return h_; }

private:
  std::uint64_t h_ = 0xcbf29ce484222325ULL;
};

} // namespace magnet
