from setuptools import setup
from wittmod.version import version

try:
    from pypandoc import convert
    read_md = lambda f: convert(f, 'rst')
except ImportError:
    print("warning: pypandoc module not found, could not convert Markdown to RST")
    read_md = lambda f: open(f, 'r').read()

setup( name='wittmod',
       version=version,
       description='Exact computations with Lie algebras of vector fields '
       'and their Whittaker and cuspidal modules',
       long_description=read_md('README.md'),
       keywords='lie-algebras representation-theory computer-algebra '
       'vector-fields enveloping-algebra',
       classifiers=[
           'Development Status :: 3 - Alpha',
           'Intended Audience :: Science/Research',
           'License :: OSI Approved :: GNU General Public License v2 (GPLv2)',
           'Programming Language :: Python :: 3',
           'Topic :: Scientific/Engineering :: Mathematics'
       ],
       license='GPLv2',
       packages=['wittmod',
                 'wittmod.utils'],
       install_requires=[
           'numpy',
           'pyyaml',
           'sympy>=1.13'
       ],
       tests_require=['pytest', 'hypothesis'],
       scripts=['wittmod_cli.py'],
       include_package_data=True,
       zip_safe=False
)
