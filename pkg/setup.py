from setuptools import setup, find_packages

setup(
    name='reflexive_minhom',
    version='1.0',
    description='Min-Max orderings, dichotomy classification and exact min-cost homomorphisms for reflexive digraphs.',
    packages=find_packages(exclude=['tests', 'tests.*']),
    py_modules=['reflexive_minhom.available_commands', 'reflexive_minhom.cli'],
    install_requires=['numpy',
                      'networkx>=2.6',
                      'psutil'
                    ]
)
