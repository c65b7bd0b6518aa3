#include "ptpoly/errors.hpp"

namespace ptpoly {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::degenerate_input: return "degenerate input";
    case ErrorKind::parse_error: return "parse error";
    case ErrorKind::missing_hull: return "missing hull edge";
    case ErrorKind::crossing_input: return "crossing input";
    case ErrorKind::boundary_element: return "boundary element";
    case ErrorKind::not_fmpt: return "not a fully-marked pseudo-triangulation";
    case ErrorKind::too_large: return "too large";
    case ErrorKind::not_a_dependence: return "not an affine dependence";
    case ErrorKind::collinear4: return "collinear quadruple";
    case ErrorKind::not_collinear: return "not collinear";
    case ErrorKind::wrong_configuration: return "wrong configuration";
    case ErrorKind::singular_system: return "singular system";
    case ErrorKind::infeasible_vertex: return "infeasible vertex";
    case ErrorKind::skeleton_mismatch: return "skeleton mismatch";
    case ErrorKind::no_boundary_collinearity: return "no boundary collinearity";
    case ErrorKind::bad_subset: return "bad subset";
    case ErrorKind::not_rigid: return "not rigid";
    }
    return "error";
}

}  // namespace ptpoly
