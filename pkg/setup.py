from setuptools import setup

setup(name='catcoend',
      version='0.1.0',
      description='Ends, coends and weighted (co)limits of Set-valued functors on finite categories',
      long_description=open('README.md', encoding='utf-8').read(),
      long_description_content_type='text/markdown',
      author='The catcoend developers',
      license='MIT',
      python_requires='>=3.8',
      install_requires=['setuptools',
                        'PyYAML>=5.1',
                        'regex',
                        'numpy>=1.20.2'],
      extras_require={'test': ['hypothesis']},
      scripts=['catcoend/bin/catcoend_cli.py'],
      packages=['catcoend'],
      package_dir={'catcoend': 'catcoend'},
      package_data={'catcoend': ['data/*.yml', 'data/examples/*.yml']},
      zip_safe=True,
      classifiers=['Operating System :: OS Independent',
                   'Programming Language :: Python :: 3',
                   'Topic :: Software Development :: Libraries :: Python Modules',
                   'Topic :: Scientific/Engineering :: Mathematics']
      )
