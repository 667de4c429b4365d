#include <pybind11/pybind11.h>

PYBIND11_MODULE(pmp_py, m) {
  m.doc() = "pebble motion solver bindings";
}
