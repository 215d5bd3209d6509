"""The setup script for installing and distributing the weier4 package."""
from setuptools import setup, find_packages


setup(
    packages=find_packages(exclude=['tests', '*.tests', '*.tests.*']),
    zip_safe=False,
    entry_points={
        'console_scripts': [
            'weier4 = weier4.app.cli:main',
        ],
    },
)
