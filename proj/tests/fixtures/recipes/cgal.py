class Cgal(CMakePackage):
    version('6.0.2', url='https://github.com/CGAL/cgal/releases/download/v6.0.2/CGAL-6.0.2.tar.xz')
