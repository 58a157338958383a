#ifndef PDGTD_MSH_IO_HPP
#define PDGTD_MSH_IO_HPP

#include <iosfwd>
#include <optional>

#include "pdgtd/mesh.hpp"

namespace pdgtd {

enum class MeshFormat { Msh22Ascii };

// Reads the MSH 2.2 ASCII subset: $MeshFormat "2.2 0 8", $Nodes, $Elements
// with type 4 tetrahedra (material id = first physical tag) and type 2
// boundary/sheet triangles tagged 1=PEC, 2=ABC_TOP, 3=ABC_BOTTOM. Periodic
// faces carry no triangle and are classified geometrically in finalize().
Mesh load_mesh(std::istream& in, MeshFormat format,
               const std::optional<Lattice2>& lattice = std::nullopt);

void save_mesh(std::ostream& out, const Mesh& mesh, MeshFormat format);

}  // namespace pdgtd

#endif
