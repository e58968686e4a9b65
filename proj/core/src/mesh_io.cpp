#include "cmcgk/mesh_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace cmcgk::cli {

MeshFormat mesh_format_from_string(const std::string& name) {
    if (name == "obj") return MeshFormat::obj;
    if (name == "ply") return MeshFormat::ply;
    throw std::invalid_argument("mesh format must be obj or ply, got '" + name + "'");
}

namespace {

void require_exportable(const weier::ReconstructedSurface& s) {
    if (!s.complete())
        throw std::runtime_error("export: surface reconstruction is incomplete");
    for (std::size_t k = 0; k < s.zeta.data.size(); ++k) {
        const cx z = s.zeta.data[k];
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) ||
            !std::isfinite(s.x3.data[k]))
            throw std::runtime_error("export: non-finite vertex data");
    }
}

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

}  // namespace

void export_mesh(const weier::ReconstructedSurface& s, const std::string& path,
                 MeshFormat format) {
    require_exportable(s);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error(path + ": cannot open for writing");

    const grid::GridShape& shape = s.zeta.shape;
    const int nu = shape.nu, nv = shape.nv;
    const long nverts = static_cast<long>(nu) * nv;
    const long nfaces = 2L * (nu - 1) * (nv - 1);

    if (format == MeshFormat::ply) {
        out << "ply\nformat ascii 1.0\n";
        out << "element vertex " << nverts << "\n";
        out << "property float x\nproperty float y\nproperty float z\n";
        out << "element face " << nfaces << "\n";
        out << "property list uchar int vertex_indices\nend_header\n";
    }

    for (int j = 0; j < nv; ++j)
        for (int i = 0; i < nu; ++i) {
            const cx z = s.zeta.at(i, j);
            if (format == MeshFormat::obj) out << "v ";
            out << num(z.real()) << " " << num(z.imag()) << " " << num(s.x3.at(i, j))
                << "\n";
        }

    for (int j = 0; j + 1 < nv; ++j)
        for (int i = 0; i + 1 < nu; ++i) {
            const long a = static_cast<long>(shape.index(i, j));
            const long b = static_cast<long>(shape.index(i + 1, j));
            const long c = static_cast<long>(shape.index(i + 1, j + 1));
            const long d = static_cast<long>(shape.index(i, j + 1));
            if (format == MeshFormat::obj) {
                out << "f " << a + 1 << " " << b + 1 << " " << c + 1 << "\n";
                out << "f " << a + 1 << " " << c + 1 << " " << d + 1 << "\n";
            } else {
                out << "3 " << a << " " << b << " " << c << "\n";
                out << "3 " << a << " " << c << " " << d << "\n";
            }
        }
    if (!out) throw std::runtime_error(path + ": write failed");
}

void export_samples(const weier::ReconstructedSurface& s, const std::string& path) {
    require_exportable(s);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error(path + ": cannot open for writing");
    out << "u,v,x1,x2,x3,re_eta,im_eta,lambda\n";
    const grid::GridShape& shape = s.zeta.shape;
    for (int j = 0; j < shape.nv; ++j)
        for (int i = 0; i < shape.nu; ++i) {
            const cx z = shape.node(i, j);
            const cx zeta = s.zeta.at(i, j);
            const cx eta = s.eta.at(i, j);
            out << num(z.real()) << "," << num(z.imag()) << "," << num(zeta.real()) << ","
                << num(zeta.imag()) << "," << num(s.x3.at(i, j)) << "," << num(eta.real())
                << "," << num(eta.imag()) << "," << num(s.lambda.at(i, j)) << "\n";
        }
    if (!out) throw std::runtime_error(path + ": write failed");
}

}  // namespace cmcgk::cli
