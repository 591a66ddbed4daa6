# Produtos: workbench de álgebras de Hecke de nível superior
