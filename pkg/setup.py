#!/usr/bin/env python

"""The setup script."""

from setuptools import find_packages, setup

with open("README.md") as readme_file:
    readme = readme_file.read()

with open("HISTORY.rst") as history_file:
    history = history_file.read()

requirements = [
    "django-environ>=0.8.0",
    "jsonschema>=4.0.0",
    "numpy>=1.22.0",
    "networkx>=2.8",
    "joblib>=1.3.0",
    "tqdm>=4.60.0",
]

test_requirements = [
    "pytest>=6.0.0",
    "factory-boy>=3.2.0",
]

setup(
    author="Open Healthcare Network",
    author_email="info@ohc.network",
    python_requires=">=3.10",
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Natural Language :: English",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: 3.12",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    description="Exact distance Laplacian spectra and cospectral graph constructions",
    entry_points={
        "console_scripts": [
            "dl-cospectral=dl_cospectral.cli.main:main",
        ],
    },
    install_requires=requirements,
    extras_require={"test": test_requirements},
    license="MIT license",
    long_description=readme + "\n\n" + history,
    long_description_content_type="text/markdown",
    include_package_data=True,
    keywords="dl_cospectral,distance laplacian,cospectral graphs,spectral graph theory",
    name="dl_cospectral",
    packages=find_packages(include=["dl_cospectral", "dl_cospectral.*"]),
    test_suite="tests",
    tests_require=test_requirements,
    version="0.1.0",
    zip_safe=False,
)
