# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.
import os

from setuptools import find_packages, setup


def read(fname):
    return open(os.path.join(os.path.dirname(__file__), fname)).read()


setup(
    name="eulerminor",
    version="0.1.0",
    description="Eulerian-minor containment, planar and outer-planar obstructions, and 4-regular planar reductions for multigraphs.",
    license="MIT",
    keywords="graph minors eulerian multigraph planarity obstructions",
    packages=find_packages(exclude=["tests", "examples", "examples.*"]),
    python_requires=">=3.8",
    install_requires=["numpy", "scipy", "networkx>=2.6", "typer"],
    extras_require={"test": ["pytest", "hypothesis"]},
    entry_points={"console_scripts": ["eulerminor=eulerminor.cli:main"]},
    long_description=read("README.md"),
    long_description_content_type="text/markdown",
    classifiers=[
        "Development Status :: 4 - Beta",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
)
