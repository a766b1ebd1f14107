#!/usr/bin/env python

from setuptools import find_packages, setup

from hybridnet import __version__

with open('README.md', 'r') as f:
    long_description = f.read()

setup(
    name='hybridnet',
    version=__version__,
    description=(
        'Workbench for a deterministic hybrid-growth scale-free network'
    ),
    long_description=long_description,
    long_description_content_type='text/markdown',
    packages=find_packages(exclude=['tests']),
    include_package_data=True,
    package_data={'hybridnet': ['static/*.yml', 'template/*.j2']},
    install_requires=[
        'docopt', 'jinja2', 'luigi', 'networkx', 'numpy', 'psutil', 'pydot',
        'pyyaml'
    ],
    extras_require={'test': ['pytest']},
    entry_points={
        'console_scripts': ['hybridnet=hybridnet.cli.main:main']
    },
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Environment :: Console',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: MIT License',
        'Operating System :: MacOS :: MacOS X',
        'Operating System :: POSIX :: Linux',
        'Programming Language :: Python',
        'Programming Language :: Python :: 3',
        'Topic :: Scientific/Engineering',
        'Topic :: Scientific/Engineering :: Mathematics'
    ],
    python_requires='>=3.8',
)
