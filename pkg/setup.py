from setuptools import setup

setup(
    name='sfqmtunnel',
    version='0.1.0',
    author='sfqmtunnel developers',
    description='Tunneling phase times of locally periodic barriers in space-fractional quantum mechanics',
    license='MIT',
    packages=['sfqmtunnel', 'sfqmtunnel.oracle', 'sfqmtunnel.utils'],
    classifiers=['Development Status :: 3 - Alpha'],
    install_requires=['numpy>=1.20.0', 'scipy>=1.5', 'pandas>=1.5.0', 'joblib>=1.0'],
    extras_require={'test': ['mpmath>=1.2']},
    entry_points={'console_scripts': ['sfqm-tunnel = sfqmtunnel.cli:main']},
)
