#!/usr/bin/env python
import re
import sys

from setuptools import Command, setup, find_packages

long_description = ''

if 'upload' in sys.argv:
    with open('README.rst') as f:
        long_description = f.read()

with open('kahlerlens/__init__.py') as f:
    version = re.search(r"^__version__ = '([^']+)'", f.read(), re.M).group(1)

install_reqs = [
    'numpy>=1.17',
    'pandas>=1.0',
    'scipy>=1.4',
    'IPython>=7.0',
    'pyparsing>=3.0',
]

extra_reqs = {
    'test': [
        "hypothesis>=5.0",
        "parameterized>=0.7.0",
        "pytest>=6.0",
        "tox>=3.0",
    ],
}


class BuildCatalog(Command):
    """Regenerate kahlerlens/catalog.json from freshly verified records."""

    description = 'verify the known solutions and rewrite catalog.json'
    user_options = []

    def initialize_options(self):
        pass

    def finalize_options(self):
        pass

    def run(self):
        from kahlerlens.geometry import write_catalog
        print("wrote {}".format(write_catalog()))


if __name__ == "__main__":
    setup(
        name='kahlerlens',
        version=version,
        cmdclass={'build_catalog': BuildCatalog},
        description='Exact verification and classification of polynomial '
                    'Kahler-Einstein potentials',
        author='The kahlerlens developers',
        packages=find_packages(include=['kahlerlens', 'kahlerlens.*']),
        package_data={
            'kahlerlens': ['catalog.json'],
        },
        entry_points={
            'console_scripts': ['kahlerlens = kahlerlens.cli:main'],
        },
        long_description=long_description,
        python_requires='>=3.8',
        classifiers=[
            'Development Status :: 3 - Alpha',
            'Intended Audience :: Science/Research',
            'License :: OSI Approved :: Apache Software License',
            'Natural Language :: English',
            'Operating System :: OS Independent',
            'Programming Language :: Python :: 3',
            'Programming Language :: Python',
            'Topic :: Scientific/Engineering :: Mathematics',
        ],
        install_requires=install_reqs,
        extras_require=extra_reqs,
    )
