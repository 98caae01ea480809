from setuptools import setup, find_packages

setup(
    name='distsketch',
    version='0.1',
    packages=find_packages(exclude=['test', 'test.*']),
    include_package_data=True,
    install_requires=[
        'click',
        'numpy',
        'scipy',
        'networkx',
        'cityhash',
        'prettytable',
    ],
    entry_points='''
        [console_scripts]
        distsketch=distsketch.cli.cli:main
    ''',
)
