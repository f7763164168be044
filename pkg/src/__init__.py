# widthkit support package
