"""A setuptools based setup module.

See:
https://packaging.python.org/en/latest/distributing.html
https://github.com/pypa/sampleproject
"""

# Always prefer setuptools over distutils
from setuptools import setup, find_packages
# To use a consistent encoding
from codecs import open
from os import path

here = path.abspath(path.dirname(__file__))

# Get the long description from the README file
with open(path.join(here, 'README.md'), encoding='utf-8') as f:
    long_description = f.read()

setup(
    name='pb_resolvent',  # Required

    # Versions should comply with PEP 440:
    # https://www.python.org/dev/peps/pep-0440/
    version='0.0.0',  # Required

    description='Resolvent equations and certified closed form roots of '
                'polynomials up to degree four, de Moivre forms and '
                'reciprocal equations',  # Required

    long_description=long_description,  # Optional
    long_description_content_type='text/markdown',  # Optional (see note above)

    author='Communications Engineering Group (NT) Paderborn University',  # Optional

    # For a list of valid classifiers, see https://pypi.org/classifiers/
    classifiers=[  # Optional
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'Topic :: Scientific/Engineering :: Mathematics',
        'License :: OSI Approved :: MIT License',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.8',
    ],

    keywords='polynomial roots resolvent radicals',  # Optional

    packages=find_packages(exclude=['contrib', 'doc', 'tests']),  # Required

    # math.comb
    python_requires='>=3.8',

    install_requires=[
        'numpy',
        'cached_property',
        'click>=8.2',
        'sacred',
    ],  # Optional

    extras_require={  # Optional
        'dev': ['check-manifest'],
        'test': [
            'pytest',
            'hypothesis',
            'coverage',
        ],
    },

    entry_points={  # Optional
        'console_scripts': [
            'pb_resolvent=pb_resolvent.scripts.cli:cli',
        ],
    },
)
