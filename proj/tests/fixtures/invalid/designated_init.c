int arr[3] = { [1] = 2 };
