# Núcleo algébrico exato e handlers compartilhados
