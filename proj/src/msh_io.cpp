#include "pdgtd/msh_io.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <tuple>
#include <vector>

#include "pdgtd/errors.hpp"

namespace pdgtd {

namespace {

std::string next_content_line(std::istream& in, long& lineno) {
  std::string line;
  while (std::getline(in, line)) {
    ++lineno;
    auto pos = line.find_last_not_of(" \t\r\n");
    if (pos == std::string::npos) continue;
    line.erase(pos + 1);
    return line;
  }
  throw MeshError("unexpected end of MSH stream at line " + std::to_string(lineno));
}

FaceTag tag_from_physical(int phys, long lineno) {
  switch (phys) {
    case 1: return FaceTag::Pec;
    case 2: return FaceTag::AbcTop;
    case 3: return FaceTag::AbcBottom;
    default:
      throw MeshError("unknown triangle physical tag " + std::to_string(phys) + " at line " +
                      std::to_string(lineno));
  }
}

}  // namespace

Mesh load_mesh(std::istream& in, MeshFormat format, const std::optional<Lattice2>& lattice) {
  if (format != MeshFormat::Msh22Ascii) throw MeshError("unsupported mesh format");
  long lineno = 0;

  if (next_content_line(in, lineno) != "$MeshFormat")
    throw MeshError("expected $MeshFormat at line " + std::to_string(lineno));
  {
    std::istringstream ls(next_content_line(in, lineno));
    double version;
    int filetype, datasize;
    if (!(ls >> version >> filetype >> datasize) || std::abs(version - 2.2) > 1e-9 ||
        filetype != 0 || datasize != 8)
      throw MeshError("unsupported MSH header (need \"2.2 0 8\") at line " + std::to_string(lineno));
  }
  if (next_content_line(in, lineno) != "$EndMeshFormat")
    throw MeshError("expected $EndMeshFormat at line " + std::to_string(lineno));

  if (next_content_line(in, lineno) != "$Nodes")
    throw MeshError("expected $Nodes at line " + std::to_string(lineno));
  long nnodes = 0;
  {
    std::istringstream ls(next_content_line(in, lineno));
    if (!(ls >> nnodes) || nnodes < 0) throw MeshError("bad node count at line " + std::to_string(lineno));
  }
  Eigen::MatrixXd coords(nnodes, 3);
  std::map<long, int> node_id;  // MSH node ids need not be dense
  for (long i = 0; i < nnodes; ++i) {
    std::istringstream ls(next_content_line(in, lineno));
    long id;
    double x, y, z;
    if (!(ls >> id >> x >> y >> z)) throw MeshError("bad node at line " + std::to_string(lineno));
    node_id[id] = int(i);
    coords.row(i) << x, y, z;
  }
  if (next_content_line(in, lineno) != "$EndNodes")
    throw MeshError("expected $EndNodes at line " + std::to_string(lineno));

  if (next_content_line(in, lineno) != "$Elements")
    throw MeshError("expected $Elements at line " + std::to_string(lineno));
  long nelem = 0;
  {
    std::istringstream ls(next_content_line(in, lineno));
    if (!(ls >> nelem) || nelem < 0) throw MeshError("bad element count at line " + std::to_string(lineno));
  }

  std::vector<std::array<int, 4>> tets;
  std::vector<int> mats;
  struct TaggedTri {
    std::array<int, 3> v;
    FaceTag tag;
  };
  std::vector<TaggedTri> tris;

  auto lookup = [&](long id) {
    auto it = node_id.find(id);
    if (it == node_id.end())
      throw MeshError("element references unknown node " + std::to_string(id) + " at line " +
                      std::to_string(lineno));
    return it->second;
  };

  for (long e = 0; e < nelem; ++e) {
    std::istringstream ls(next_content_line(in, lineno));
    long id;
    int type, ntags;
    if (!(ls >> id >> type >> ntags)) throw MeshError("bad element at line " + std::to_string(lineno));
    std::vector<int> tags(ntags);
    for (int i = 0; i < ntags; ++i)
      if (!(ls >> tags[i])) throw MeshError("bad element tags at line " + std::to_string(lineno));
    if (type == 4) {
      long a, b, c, d;
      if (!(ls >> a >> b >> c >> d)) throw MeshError("bad tetrahedron at line " + std::to_string(lineno));
      tets.push_back({lookup(a), lookup(b), lookup(c), lookup(d)});
      mats.push_back(ntags > 0 ? tags[0] : 1);
    } else if (type == 2) {
      long a, b, c;
      if (!(ls >> a >> b >> c)) throw MeshError("bad triangle at line " + std::to_string(lineno));
      if (ntags < 1) throw MeshError("boundary triangle without physical tag at line " + std::to_string(lineno));
      tris.push_back({{lookup(a), lookup(b), lookup(c)}, tag_from_physical(tags[0], lineno)});
    } else if (type == 15 || type == 1) {
      // points / lines are ignored
    } else {
      throw MeshError("unsupported element type " + std::to_string(type) + " at line " +
                      std::to_string(lineno));
    }
  }
  if (next_content_line(in, lineno) != "$EndElements")
    throw MeshError("expected $EndElements at line " + std::to_string(lineno));
  if (tets.empty()) throw MeshError("MSH stream contains no tetrahedra");

  Mesh mesh;
  mesh.vertices = coords;
  mesh.tets.resize(long(tets.size()), 4);
  for (size_t k = 0; k < tets.size(); ++k)
    for (int i = 0; i < 4; ++i) mesh.tets(long(k), i) = tets[k][i];
  mesh.material = mats;
  mesh.lattice = lattice;

  // Attach tagged triangles to tet faces before finalize() (which may swap
  // local faces 0/1 when fixing orientation, carrying tags along).
  mesh.face_tag.assign(tets.size(),
                       {FaceTag::Interior, FaceTag::Interior, FaceTag::Interior, FaceTag::Interior});
  if (!tris.empty()) {
    std::map<std::tuple<int, int, int>, FaceTag> tri_map;
    for (auto& t : tris) {
      auto v = t.v;
      std::sort(v.begin(), v.end());
      tri_map[std::make_tuple(v[0], v[1], v[2])] = t.tag;
    }
    size_t matched = 0;
    for (size_t k = 0; k < tets.size(); ++k) {
      for (int f = 0; f < 4; ++f) {
        const auto& fv = tet_face_vertices()[f];
        std::array<int, 3> tri = {tets[k][fv[0]], tets[k][fv[1]], tets[k][fv[2]]};
        std::sort(tri.begin(), tri.end());
        auto it = tri_map.find(std::make_tuple(tri[0], tri[1], tri[2]));
        if (it != tri_map.end()) {
          mesh.face_tag[k][f] = it->second;
          ++matched;
        }
      }
    }
    // Interior PEC sheets match twice (once per side); boundary tags once.
    if (matched < tri_map.size())
      throw MeshError("tagged triangle does not match any tetrahedron face");
  }

  double tol = lattice ? lattice->tol()
                       : 1e-8 * (coords.colwise().maxCoeff() - coords.colwise().minCoeff()).norm();
  mesh.finalize(tol);
  return mesh;
}

void save_mesh(std::ostream& out, const Mesh& mesh, MeshFormat format) {
  if (format != MeshFormat::Msh22Ascii) throw MeshError("unsupported mesh format");
  out << "$MeshFormat\n2.2 0 8\n$EndMeshFormat\n";
  out << "$Nodes\n" << mesh.num_vertices() << "\n";
  char buf[128];
  for (int v = 0; v < mesh.num_vertices(); ++v) {
    snprintf(buf, sizeof buf, "%d %.17g %.17g %.17g\n", v + 1, mesh.vertices(v, 0),
             mesh.vertices(v, 1), mesh.vertices(v, 2));
    out << buf;
  }
  out << "$EndNodes\n";

  long ntris = 0;
  for (int k = 0; k < mesh.num_elements(); ++k)
    for (int f = 0; f < 4; ++f) {
      FaceTag t = mesh.face_tag[k][f];
      if (t == FaceTag::Pec || t == FaceTag::AbcTop || t == FaceTag::AbcBottom) ++ntris;
    }

  out << "$Elements\n" << (mesh.num_elements() + ntris) << "\n";
  long id = 1;
  for (int k = 0; k < mesh.num_elements(); ++k) {
    for (int f = 0; f < 4; ++f) {
      FaceTag t = mesh.face_tag[k][f];
      int phys = (t == FaceTag::Pec) ? 1 : (t == FaceTag::AbcTop) ? 2 : (t == FaceTag::AbcBottom) ? 3 : 0;
      if (phys == 0) continue;
      const auto& fv = tet_face_vertices()[f];
      out << id++ << " 2 2 " << phys << " " << phys << " " << mesh.tets(k, fv[0]) + 1 << " "
          << mesh.tets(k, fv[1]) + 1 << " " << mesh.tets(k, fv[2]) + 1 << "\n";
    }
  }
  for (int k = 0; k < mesh.num_elements(); ++k) {
    out << id++ << " 4 2 " << mesh.material[k] << " " << mesh.material[k];
    for (int i = 0; i < 4; ++i) out << " " << mesh.tets(k, i) + 1;
    out << "\n";
  }
  out << "$EndElements\n";
}

}  // namespace pdgtd
