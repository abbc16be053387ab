#include <pybind11/pybind11.h>

namespace py = pybind11;

PYBIND11_MODULE(_rowcol, m) {
    m.doc() = "row/column interpolation toolkit (placeholder)";
}
