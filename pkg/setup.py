from setuptools import setup

setup(
    python_requires='>=3.6, <4',
    install_requires=[
        'absl-py>=0.1.13',
        'networkx>=2.3',
        'numpy>=1.12.1',
        'pandas>=1.0.0',
        'sympy>=1.1',
    ],
    setup_requires=['pytest-runner'],
    tests_require=['hypothesis>=4.0', 'pytest', 'pytest-cov'],
    extras_require={'test': ['hypothesis>=4.0', 'pytest', 'pytest-cov']},
    entry_points={
        'console_scripts': ['cyclesetext = cyclesetext.cli.main:run'],
    })
