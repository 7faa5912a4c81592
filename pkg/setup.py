from setuptools import setup

setup(
    name='chromalg',
    version='0.1.0',
    description='Exact computations in the chromatic algebra, Temperley-Lieb and SO(3) BMW skein '
                'algebras',
    long_description=open('README.md').read(),
    license='MIT',
    packages=['chromalg'],
    python_requires='>=3.6',
    install_requires=[
        'numpy',
        'networkx',
        'sympy',
    ],
    extras_require={
        'tests': ['pytest'],
    },
    entry_points={
        'console_scripts': ['chromalg=chromalg.cli:main'],
    },
)
