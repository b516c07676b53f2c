from setuptools import setup, find_packages

setup(
    name='PositroidToolkit',
    version='0.1',
    packages=find_packages(exclude=['test', 'test.*']),
    package_data={'PositroidToolkit': ['fixtures/*.net', 'fixtures/*.txt']},
    install_requires=[
        'sympy>=1.12',
        'networkx>=3.1',
        'markdown2>=2.4.10',
    ],
    entry_points={
        'console_scripts': ['positroid = PositroidToolkit.cli.core:main'],
    },
    author='Felipe Felix Arias',
    author_email='felipefelixarias@gmail.com',
    description='Exact computations with positroid varieties, plabic networks and amplituhedra',
    # long_description=open('README.md').read(),
    # long_description_content_type='text/markdown',
)
