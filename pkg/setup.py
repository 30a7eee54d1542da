from setuptools import setup, find_packages


def get_version(filename):
    """Extract the package version"""
    with open(filename) as in_fh:
        for line in in_fh:
            if line.startswith('__version__'):
                return line.split('=')[1].strip()[1:-1]
    raise ValueError("Cannot extract version from %s" % filename)


version = get_version('semiwave/__init__.py')

setup(
    name='semiwave',
    version=version,
    description="Lifespan and blow-up of 1D semilinear wave equations with "
                "derivative nonlinearities",
    scripts=["bin/semiwave"],
    author="semiwave authors",
    packages=find_packages(exclude=["tests", "tests.*"]),
    install_requires=[
        'click',
        'numpy',
        'scipy',
        'sympy',
    ],
    extras_require={
        'dev': ['pytest', 'pytest-cov', 'pytest-xdist', 'coverage',
                'sphinx', 'sphinx-autobuild', 'sphinx_rtd_theme'],
    },
    classifiers=[
        'Programming Language :: Python',
        'Programming Language :: Python :: 3 :: Only',
        'License :: OSI Approved :: GNU General Public License (GPL)',
        'Operating System :: OS Independent',
        'Development Status :: 4 - Beta',
        'Environment :: Console',
        'Intended Audience :: Science/Research',
        'Topic :: Scientific/Engineering :: Physics',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
)
