import os
import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        # get_ext_fullpath ends in lcorner/_core.<abi>.so; two levels up is
        # the staging root the cmake install step targets
        prefix = Path(self.get_ext_fullpath(ext.name)).resolve().parent.parent
        build_dir = Path(self.build_temp).resolve() / "cmake"
        build_dir.mkdir(parents=True, exist_ok=True)

        config = "Debug" if self.debug else "Release"
        subprocess.run(
            [
                "cmake",
                "-S", str(Path(__file__).parent.resolve()),
                "-B", str(build_dir),
                f"-DCMAKE_BUILD_TYPE={config}",
                # install only the extension module, skip tests
                "-DSKBUILD=ON",
                f"-DPython3_EXECUTABLE={sys.executable}",
            ],
            check=True,
        )
        subprocess.run(
            [
                "cmake", "--build", str(build_dir),
                "--target", "lcorner_python",
                f"-j{os.cpu_count() or 1}",
            ],
            check=True,
        )
        subprocess.run(
            ["cmake", "--install", str(build_dir), "--prefix", str(prefix)],
            check=True,
        )


setup(
    ext_modules=[CMakeExtension("lcorner._core")],
    cmdclass={"build_ext": CMakeBuild},
)
