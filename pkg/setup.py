"""Setup configuration for ordered_coloring package."""

from setuptools import setup, find_packages

setup(
    name="ordered_coloring",
    version="0.1.0",
    description="List coloring on ordered graphs: pattern-free solvers and hardness gadgets",
    author="Ordered Coloring Team",
    package_dir={"": "src"},
    packages=find_packages(where="src"),
    python_requires=">=3.9",
    install_requires=[
        "numpy>=1.20.0",
        "scipy>=1.7.0",
        "pandas>=1.3.0",
        "pyyaml>=5.4.0",
        "networkx>=2.6",
    ],
    extras_require={
        "dev": ["pytest>=6.0", "pytest-cov>=2.12.0", "hypothesis>=6.0"],
    },
    entry_points={
        "console_scripts": ["olc=ordered_coloring.cli:main"],
    },
)
