#!/usr/bin/env python
# -*- coding: utf-8; py-indent-offset:4 -*-
import setuptools

with open("README.md", "r") as fh:
    long_description = fh.read()

setuptools.setup(
    name='hesse_flow',

    version='1.0.0',

    description='Exact and numeric study of the hessian map on elliptic curve moduli, with dessins and figures (Bokeh)',

    python_requires='>=3.9',

    long_description=long_description,
    long_description_content_type="text/markdown",

    license='GPLv3+',

    # What does your project relate to?
    keywords=['elliptic curves', 'hesse pencil', 'complex dynamics', 'dessins d\'enfants', 'plotting'],

    packages=setuptools.find_packages(exclude=['tests', 'tests.*']),

    package_data={'hesse_flow': ['templates/*.j2']},

    install_requires=[
        'bokeh>=2.4',
        'jinja2',
        'pandas',
        'matplotlib',
        'markdown2',
        'sympy',
        'numpy',
        'scipy',
    ],

    extras_require={
        'test': ['pytest'],
    },

    entry_points={
        'console_scripts': [
            'hesse-flow=hesse_flow.cli:main',
        ],
    },
)
