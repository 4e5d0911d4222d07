#!/usr/bin/env python3
# coding=utf-8

"""
    python distribute file
"""

from setuptools import setup, find_packages


def requirements_file_to_list(fn='requirements.txt'):
    """
        read a requirements file and create a list that can be used in setup.
    """
    with open(fn, 'r') as f:
        return [x.rstrip() for x in list(f) if x.strip() and not x.startswith('#')]


setup(
    name='dirlag',
    version='0.1.0',
    packages=find_packages('src', exclude=['tests']),
    package_dir={'': 'src'},
    install_requires=requirements_file_to_list(),
    tests_require=requirements_file_to_list('requirements-test.txt'),
    extras_require={
        'test': requirements_file_to_list('requirements-test.txt'),
    },
    entry_points={
        'console_scripts': [
            'dirlag = dirlag:start_cli',
        ]
    },
    python_requires='>=3.9',
    test_suite="tests",
    description='Convolution polynomials and Lagrange inversion for truncated Dirichlet series',
    long_description=open('README.md').read(),
    keywords='Dirichlet series convolution polynomials Lagrange inversion',
    license='GPLv3',
    classifiers=[
        'Development Status :: 3 - Alpha',
        'License :: OSI Approved :: GNU General Public License v3 (GPLv3)',
        'Programming Language :: Python :: 3.9',
        'Topic :: Scientific/Engineering :: Mathematics',
    ]
)
