from setuptools import setup, find_packages

# read the contents of the README file
import os
from os import path

this_directory = path.abspath(path.dirname(__file__))
with open(path.join(this_directory, "README.md"), encoding="utf-8") as f:
    long_description = f.read()


# function to recursively get files for resources
def package_files(directory):
    paths = []
    for (path, directories, filenames) in os.walk(directory):
        for filename in filenames:
            paths.append(os.path.join('..', path, filename))
    return paths


# get all files recursively from /resources
resource_files = package_files('./resources')

def get_version():
    """Load the version from _version.py, without importing it.
    This function assumes that the first line in the file contains a variable defining the
    version string with single quotes.
    """
    try:
        with open('ksparse/_version.py', 'r') as f:
            return f.read().split('\n')[0].split('=')[-1].replace('\'', '').strip()
    except IOError:
        raise IOError

setup(
    name="ksparse",
    version=get_version(),
    description="k-sparse matrix factorizations and randomized projection solvers for sparse, hierarchical and Laplacian systems.",
    packages=find_packages(exclude=["tests", "tests.*"]),
    install_requires=[
        "numpy>=1.19",
        "scipy>=1.5",
        "networkx>=2.5",
        "jsonschema",
        "pyyaml",
        "pandas>=1.0",
    ],
    extras_require={"test": ["pytest"]},
    entry_points={"console_scripts": ["ksparse=ksparse.cli.main:main"]},
    long_description=long_description,
    long_description_content_type="text/markdown",
    package_data={"ksparse": resource_files},
)
