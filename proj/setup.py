import shutil
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
        ext_path = Path(self.get_ext_fullpath(ext.name)).resolve()
        source_dir = Path(__file__).resolve().parent
        build_temp = Path(self.build_temp).resolve() / "cmake"
        build_temp.mkdir(parents=True, exist_ok=True)

        cfg = "Debug" if self.debug else "Release"
        subprocess.run(
            [
                "cmake",
                "-S", str(source_dir),
                "-B", str(build_temp),
                f"-DCMAKE_BUILD_TYPE={cfg}",
                f"-DPython3_EXECUTABLE={sys.executable}",
                "-DHARDYAPPROX_BUILD_TESTS=OFF",
            ],
            check=True,
        )
        subprocess.run(
            ["cmake", "--build", str(build_temp), "--target", "_core"],
            check=True,
        )

        built = sorted((build_temp / "python" / "hardyapprox").glob("_core*"))
        if not built:
            raise RuntimeError("cmake did not produce the _core module")
        ext_path.parent.mkdir(parents=True, exist_ok=True)
        shutil.copy2(built[-1], ext_path)


setup(
    ext_modules=[CMakeExtension("hardyapprox._core")],
    cmdclass={"build_ext": CMakeBuild},
)
