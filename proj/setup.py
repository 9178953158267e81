from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

core_sources = [
    "src/matrix.cpp",
    "src/linalg.cpp",
    "src/scalar_function.cpp",
    "src/state.cpp",
    "src/hilbert_module.cpp",
    "src/localization.cpp",
    "src/convexity.cpp",
    "src/inequalities.cpp",
    "src/suite.cpp",
]

setup(
    ext_modules=[
        Pybind11Extension(
            "cstarineq._cstarineq",
            core_sources + ["python/cstarineq_module.cpp"],
            include_dirs=["include"],
            cxx_std=20,
        )
    ],
    cmdclass={"build_ext": build_ext},
)
