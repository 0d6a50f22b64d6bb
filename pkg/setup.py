from setuptools import find_packages, setup

setup(
    name="tricyclic-main-eigen",
    version="1.0",
    description="Graphes tricycliques à exactement deux valeurs propres principales",
    packages=find_packages(include=["src", "src.*"]),
    python_requires=">=3.8",
    install_requires=[
        "colorama>=0.4.6",
        "numpy>=1.24",
    ],
    extras_require={
        "dev": [
            "black>=23.0.0",
            "flake8>=6.0.0",
            "pylint>=3.0.0",
            "pytest>=7.0.0",
            "pytest-cov>=4.1.0",
            "hypothesis>=6.80",
            "networkx>=3.1",
        ],
    },
    entry_points={
        "console_scripts": ["tricyclic=src.cli:main"],
    },
)
