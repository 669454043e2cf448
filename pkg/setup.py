#!/usr/bin/env python3
"""
toricmmp: an exact toric engine for the relative MMP with scaling

How to compile and put these on pip::

    $ python setup.py sdist
    $ twine upload dist/*

"""
from setuptools import setup, find_packages


with open('README.md') as f:
    __readme__ = f.read()


def setup_package():
    setup(name='toricmmp',
          version="0.1.0",
          description="Exact minimal model program with scaling on toric "
                      "pairs",
          long_description=__readme__,
          long_description_content_type='text/markdown',
          license="GNU General Public License",
          package_dir={'toricmmp': 'toricmmp'},
          include_package_data=True,
          package_data={'toricmmp': ['defaults.yaml',
                                     'data/instances/*.json',
                                     'tests/mocks/instances/*.json']},
          packages=find_packages(exclude=('docs', )),
          install_requires=["numpy>=1.17",
                            "scipy>=1.6",
                            "sympy>=1.5",
                            "astropy>3.0",
                            "pyyaml>3",
                            "docopt>=0.6",
                            "pplpy>=0.8",
                            ],
          tests_require=["pytest"],
          entry_points={"console_scripts":
                        ["mmp=toricmmp.commands.cli:main"]},
          classifiers=["Programming Language :: Python :: 3",
                       "Operating System :: OS Independent",
                       "Intended Audience :: Science/Research",
                       "Topic :: Scientific/Engineering :: Mathematics", ]
          )


if __name__ == '__main__':
    setup_package()
